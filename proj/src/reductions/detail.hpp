#pragma once

#include <string>
#include <vector>

#include "cflr/grammar.hpp"
#include "cflr/graph.hpp"

namespace cflr::detail {

/// One edge of a line graph; backward edges point from the new vertex to the
/// current one.
struct Step {
    std::string label;
    bool backward = false;
};

std::string unique_vertex(const LabeledGraph& g, const std::string& base);

/// Lays out `steps` starting at `from`. Interior vertices are named
/// prefix:1, prefix:2, ...; the last one is `to` unless `to` is empty.
/// Returns the final vertex.
std::string walk(LabeledGraph& g, const std::string& from, const std::string& to, const std::vector<Step>& steps,
                 const std::string& prefix);

std::vector<Step> forward(const Word& labels);

}  // namespace cflr::detail
