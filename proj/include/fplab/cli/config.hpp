#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fplab/integral.hpp"
#include "fplab/mappings.hpp"
#include "fplab/schemes.hpp"

namespace fplab::cli {

/// Everything a command can be configured with. Populated from a flat
/// key=value file and command-line flags (flags win).
struct RunConfig {
    std::string command;

    std::string mapping = "jump";
    std::optional<double> x1;
    double a = 0.85;
    double b = 0.65;
    double c = 0.45;
    std::optional<std::size_t> max_iter;
    std::optional<double> tol;
    std::optional<double> p;
    std::string yn_variant = "tz";

    std::optional<std::size_t> samples;
    std::uint64_t seed = 42;
    std::optional<std::string> out;
    std::optional<std::string> summary;

    std::string space = "euclidean:2";
    double epsilon = 1.0;
    double modulus_r = 1.0;

    std::string kernel = "default";
    double growth_m = 0.4;
    double f_scale = 1.0;
    std::string y0 = "0,1";
    std::size_t nodes = 64;
    std::string rule = "trapezoid";
    double radius = 0.0;
    double gap_tol = 1e-6;

    // Custom scalar maps (mapping = "custom").
    std::string map_domain = "0,1";
    std::string map_pieces;
    std::string map_fixed;
    std::string map_declare;
    double map_step = 0.01;
};

/// Comma-separated doubles; empty input gives an empty list.
std::vector<double> parse_list(std::string_view text);

/// Catalog entry, or the custom piecewise-polynomial map described by the
/// map_* keys:
///   map_domain  = lo,hi
///   map_pieces  = lo:hi:c0,c1,...; lo:hi:c0,...     (first match wins)
///   map_fixed   = p1,p2,...
///   map_declare = monotone=1,condition_c=0,quasi_nonexpansive=1,gen_alpha=0.5:1
MappingSpec resolve_mapping(const RunConfig& cfg);

ProblemSpec problem_spec(const RunConfig& cfg);

/// Validates coefficient ranges and enumerations; throws DomainError.
void validate(const RunConfig& cfg);

}  // namespace fplab::cli
