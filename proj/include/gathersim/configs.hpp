#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "gathersim/model.hpp"

namespace gathersim {

/// Exact realizations of the standard shapes:
///   figure1-eight-robots, n4-equilateral-center, square,
///   parallelogram-unique-diagonal, three-longest, four-longest, equilateral,
///   two-point:A,B   (A robots at (0,0), B robots at (8,0)).
/// Shapes involving sqrt 3 need radicand 3. Throws std::invalid_argument
/// for an unknown name.
Configuration named_config(const std::string& name);
std::vector<std::string> named_config_names();

Configuration two_point_config(std::size_t a, std::size_t b, const Point& p, const Point& q);

/// Distinct integer points in [-range, range]^2 with no three collinear and
/// all pairwise distances distinct.
Configuration random_generic_config(std::size_t n, std::mt19937_64& rng, int range = 8);

/// Distinct lattice points on x^2 + y^2 = 25 whose smallest enclosing circle
/// is that circle (so some boundary triple is acute or right). n in [3, 12].
Configuration random_cocircular_config(std::size_t n, std::mt19937_64& rng);

/// Generic singles with the first counts.size() groups merged: group g gets
/// counts[g] robots at one point. Ordering of robots follows the groups.
Configuration random_grouped_config(const std::vector<std::size_t>& counts, std::size_t singles,
                                    std::mt19937_64& rng, int range = 8);

struct NamedInstance {
  std::string name;
  Configuration config;
};

/// At least 20 initial configurations for N robots: generic singles, one
/// pair, two pairs, a triple, collinear, and cocircular families.
std::vector<NamedInstance> theorem_3_6_suite(std::size_t n);

/// At least five instances of each lemma's precondition class (N = n).
std::vector<NamedInstance> lemma_3_2_instances(std::size_t n);
std::vector<NamedInstance> lemma_3_3_instances(std::size_t n);
std::vector<NamedInstance> lemma_3_4_instances(std::size_t n);

}  // namespace gathersim
