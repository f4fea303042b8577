#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degp/degdata/model.hpp"

namespace degp::degdata {

std::string label_key(const Label& l);
std::string place_key(const std::optional<Place>& z);
std::string boundary_key(const BoundaryType& b);
std::string rep_key(const TorsorRep& T);
std::string torsor_key(const VertexTorsor& t);

/// Rooted-tree canonical form. Vertex tuples are ordered as
/// (kind, delta, genus, sorted marked points, representative, anchors, sorted children).
/// Throws StructureError when the tree is not connected and acyclic.
std::string canonical_encode(const SimpleDegData& d);
std::string canonical_encode(const DoubleDegData& d);
/// Normalized form of global data: components in id order, points keyed by place
/// (or by name when they carry no coordinate), attachments sorted.
std::string canonical_encode(const GlobalDegData& g);

/// Throws StructureError when species or type differ.
bool is_isomorphic(const SimpleDegData& a, const SimpleDegData& b);
bool is_isomorphic(const DoubleDegData& a, const DoubleDegData& b);

/// Vertex bijection a -> b respecting every label, or nullopt.
std::optional<std::vector<std::size_t>> isomorphism_witness(const SimpleDegData& a, const SimpleDegData& b);
std::optional<std::vector<std::size_t>> isomorphism_witness(const DoubleDegData& a, const DoubleDegData& b);

}  // namespace degp::degdata
