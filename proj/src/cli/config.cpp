#include "fplab/cli/config.hpp"

#include <charconv>
#include <string>

#include "fplab/errors.hpp"

namespace fplab::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t pos = s.find(sep, start);
        const std::size_t end = pos == std::string_view::npos ? s.size() : pos;
        out.push_back(trim(s.substr(start, end - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool parse_bool(std::string_view s) {
    s = trim(s);
    if (s == "1" || s == "true" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "no") return false;
    throw DomainError("not a boolean: '" + std::string(s) + "'");
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    if (trim(text).empty()) return out;
    for (auto item : split(text, ',')) out.push_back(parse_double(item));
    return out;
}

MappingSpec resolve_mapping(const RunConfig& cfg) {
    if (cfg.mapping != "custom") return find_mapping(cfg.mapping);

    const auto domain = parse_list(cfg.map_domain);
    if (domain.size() != 2 || !(domain[0] <= domain[1])) throw DomainError("map_domain must be 'lo,hi'");
    std::vector<PolynomialPiece> pieces;
    for (auto piece : split(cfg.map_pieces, ';')) {
        if (piece.empty()) continue;
        const auto parts = split(piece, ':');
        if (parts.size() != 3) throw DomainError("map_pieces entry must be 'lo:hi:c0,c1,...'");
        pieces.push_back({parse_double(parts[0]), parse_double(parts[1]), parse_list(parts[2])});
    }
    MappingSpec m = piecewise_polynomial_map("custom", domain[0], domain[1], std::move(pieces),
                                             parse_list(cfg.map_fixed), cfg.map_step);
    for (auto item : split(cfg.map_declare, ',')) {
        if (item.empty()) continue;
        const auto kv = split(item, '=');
        if (kv.size() != 2) throw DomainError("map_declare entries must be key=value");
        if (kv[0] == "monotone") {
            m.declared.monotone = parse_bool(kv[1]);
        } else if (kv[0] == "condition_c") {
            m.declared.condition_c = parse_bool(kv[1]);
        } else if (kv[0] == "quasi_nonexpansive") {
            m.declared.quasi_nonexpansive = parse_bool(kv[1]);
        } else if (kv[0] == "gen_alpha") {
            const auto ab = split(kv[1], ':');
            if (ab.size() != 2) throw DomainError("gen_alpha declaration must be alpha:bool");
            m.declared.gen_alpha.emplace_back(parse_double(ab[0]), parse_bool(ab[1]));
        } else {
            throw DomainError("unknown map_declare key '" + std::string(kv[0]) + "'");
        }
    }
    return m;
}

ProblemSpec problem_spec(const RunConfig& cfg) {
    ProblemSpec spec;
    spec.kernel = cfg.kernel;
    spec.growth_m = cfg.growth_m;
    spec.f_scale = cfg.f_scale;
    spec.y0 = parse_list(cfg.y0);
    if (spec.y0.empty()) throw DomainError("y0 needs at least one coefficient");
    spec.nodes = cfg.nodes;
    spec.rule = parse_quadrature_rule(cfg.rule);
    spec.radius = cfg.radius;
    return spec;
}

void validate(const RunConfig& cfg) {
    for (auto [name, v] : {std::pair{"a", cfg.a}, std::pair{"b", cfg.b}, std::pair{"c", cfg.c}}) {
        if (!(v > 0.0 && v < 1.0)) throw DomainError(std::string("coefficient ") + name + " must lie in (0,1)");
    }
    parse_yn_variant(cfg.yn_variant);
    if (cfg.max_iter && *cfg.max_iter == 0) throw DomainError("max-iter must be at least 1");
    if (cfg.tol && !(*cfg.tol >= 0.0)) throw DomainError("tol must be nonnegative");
    if (cfg.samples && *cfg.samples == 0) throw DomainError("samples must be at least 1");
}

}  // namespace fplab::cli
