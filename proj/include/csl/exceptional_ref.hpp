#pragma once

#include <map>
#include <string>
#include <vector>

#include "csl/cspcheck.hpp"

namespace csl {

/// Reference orbit structures of the k-faces (k = 1..rank) of the s = 1
/// exceptional cluster complexes, as computed by the search they reproduce.
inline const std::map<std::string, std::vector<std::vector<OrbitCount>>>&
exceptional_orbit_reference() {
  static const std::map<std::string, std::vector<std::vector<OrbitCount>>> ref{
      {"E6",
       {{{14, 2}, {7, 2}},
        {{14, 26}, {7, 5}},
        {{14, 104}, {7, 13}},
        {{14, 195}, {7, 18}},
        {{14, 171}, {7, 15}},
        {{14, 52}, {7, 15}}}},
      {"E7",
       {{{10, 7}},
        {{10, 97}, {5, 1}},
        {{10, 518}},
        {{10, 1410}, {5, 1}},
        {{10, 2020}, {2, 1}},
        {{10, 1456}},
        {{10, 416}}}},
      // The k=4 row carries 13 orbits of size 8: the count 67488 is forced
      // by the sphere symmetry of the complex (the h-vector must be
      // palindromic), so a table entry of 3 would be short by 80 faces.
      {"E8",
       {{{16, 8}},
        {{16, 149}, {8, 3}},
        {{16, 1121}},
        {{16, 4211}, {8, 13}, {4, 2}},
        {{16, 8778}},
        {{16, 10230}, {8, 22}},
        {{16, 6270}},
        {{16, 1562}, {8, 10}, {4, 2}}}},
      {"F4", {{{7, 4}}, {{7, 19}}, {{7, 30}}, {{7, 15}}}},
      {"H3", {{{6, 3}}, {{6, 8}}, {{6, 5}, {2, 1}}}},
      {"H4", {{{16, 4}}, {{16, 21}, {8, 1}}, {{16, 35}}, {{16, 17}, {8, 1}}}},
  };
  return ref;
}

/// Reference residues of Cat(Phi, q) mod q^{h+2} - 1 for the exceptional
/// types (coefficients a_0 .. a_{h+1}).
std::vector<long long> exceptional_catalan_residues(const std::string& type);

}  // namespace csl
