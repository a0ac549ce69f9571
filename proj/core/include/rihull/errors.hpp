#pragma once

#include <stdexcept>
#include <string>

namespace rihull {

// Base class for every failure the library reports deliberately.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct domain_mismatch : error {
  explicit domain_mismatch(const std::string& what) : error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

struct not_absolutely_continuous : error {
  explicit not_absolutely_continuous(const std::string& what) : error(what) {}
};

// Thrown when a value-ordered measure-preserving map is requested but the
// function satisfies neither existence condition; carries a printable witness
// level in what().
struct ryff_neither : error {
  explicit ryff_neither(const std::string& what) : error(what) {}
};

// A finite list of affine pieces cannot realize the requested map (two or more
// unbounded source directions would need disjoint half-lines in the target).
struct mpt_unrepresentable : error {
  explicit mpt_unrepresentable(const std::string& what) : error(what) {}
};

struct target_range_escape : error {
  explicit target_range_escape(const std::string& what) : error(what) {}
};

struct non_nested_layers : error {
  explicit non_nested_layers(const std::string& what) : error(what) {}
};

struct epsilon_zero_not_available : error {
  explicit epsilon_zero_not_available(const std::string& what) : error(what) {}
};

struct vstar_is_zero : error {
  explicit vstar_is_zero(const std::string& what) : error(what) {}
};

struct vstar_not_zero : error {
  explicit vstar_not_zero(const std::string& what) : error(what) {}
};

struct unbounded_support_piece : error {
  explicit unbounded_support_piece(const std::string& what) : error(what) {}
};

struct non_integrable_weight : error {
  explicit non_integrable_weight(const std::string& what) : error(what) {}
};

}  // namespace rihull
