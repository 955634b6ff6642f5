#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace coloop {

// {s_0|...|s_{l-1}} s_l {s_{l+1}|...|s_k}: blocks of {0..n}, each sorted.
struct NString {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  int l = 0;

  int k() const { return static_cast<int>(blocks.size()) - 1; }
  const std::vector<int>& marked() const { return blocks.at(l); }
  // sum over unmarked blocks of (|s_i| - 2) plus |s_l| - 1
  int dimension() const;
  bool is_vertex() const { return dimension() == 0; }

  // One message per violated condition; empty when valid.
  std::vector<std::string> violations() const;
  bool valid() const { return violations().empty(); }

  auto operator<=>(const NString&) const = default;
};

// "{0,1|1,3}3{3,4}"; "{}0,1,2{}" for the top cell of the 2-freehedron.
std::string to_string(const NString& s);
// Inverse of to_string (whitespace ignored, "{ }" accepted); n is the largest
// element of the last block. Throws ValidationError on malformed or invalid input.
NString parse_nstring(const std::string& text);

enum class FaceKind { drop, inner_break, right_outer_break, left_outer_break };

std::string face_kind_name(FaceKind kind);

struct FaceTransformation {
  FaceKind kind = FaceKind::drop;
  int block = 0;  // index j of the block acted on (l for the outer breaks)
  int x = 0;      // element dropped or cut at

  auto operator<=>(const FaceTransformation&) const = default;
};

// Throws ValidationError naming the side condition that fails.
NString apply_transformation(const NString& s, const FaceTransformation& t);
// Every transformation whose side conditions hold on s, in a fixed order.
std::vector<FaceTransformation> applicable_transformations(const NString& s);

NString top_string(int n);

// zeta^i on a vertex string of F_n, giving a vertex string of F_{n-1}:
// j -> j for j <= i, j -> j - 1 for j > i. An unmarked block {i, i+1}
// collapses and is omitted; the marked block is kept even when it collapses.
struct CodegeneracyImage {
  NString image;
  bool collapsed = false;  // some block {i, i+1} was collapsed
};
// Throws ValidationError unless 0 <= i < n and every block has at most two elements.
CodegeneracyImage codegeneracy(const NString& s, int i);

}  // namespace coloop
