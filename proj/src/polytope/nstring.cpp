#include "coloop/polytope/nstring.hpp"

#include <algorithm>
#include <cctype>

#include "coloop/errors.hpp"

namespace coloop {

int NString::dimension() const {
  int d = 0;
  for (int i = 0; i <= k(); ++i) d += static_cast<int>(blocks[i].size()) - (i == l ? 1 : 2);
  return d;
}

std::vector<std::string> NString::violations() const {
  std::vector<std::string> out;
  if (n < 0) out.push_back("n is negative");
  if (blocks.empty()) {
    out.push_back("no blocks");
    return out;
  }
  if (k() > n) out.push_back("more than n + 1 blocks");
  if (l < 0 || l > k()) {
    out.push_back("marked index outside [0, k]");
    return out;
  }
  for (int i = 0; i <= k(); ++i) {
    const auto& b = blocks[i];
    std::string where = "block " + std::to_string(i);
    if (b.empty()) {
      out.push_back(where + " is empty");
      continue;
    }
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      out.push_back(where + " is not a strictly increasing set");
    if (b.front() < 0 || b.back() > n) out.push_back(where + " leaves {0..n}");
    if (i != l && b.size() < 2) out.push_back(where + " is unmarked and has fewer than two elements");
  }
  for (int i = 0; i < k(); ++i)
    if (!blocks[i].empty() && !blocks[i + 1].empty() && blocks[i].back() != blocks[i + 1].front())
      out.push_back("max of block " + std::to_string(i) + " differs from min of block " + std::to_string(i + 1));
  if (!blocks.front().empty() && blocks.front().front() != 0) out.push_back("min of the first block is not 0");
  if (!blocks.back().empty() && blocks.back().back() != n) out.push_back("max of the last block is not n");
  return out;
}

namespace {

std::string join(const std::vector<int>& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b[i]);
  }
  return out;
}

std::string bar_list(const NString& s, int from, int to) {
  std::string out = "{";
  for (int i = from; i < to; ++i) {
    if (i > from) out += '|';
    out += join(s.blocks[i]);
  }
  return out + "}";
}

std::vector<int> parse_block(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ValidationError("n-string: bad element '" + item + "'");
    out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw ValidationError("n-string: trailing comma");
  }
  if (out.empty()) throw ValidationError("n-string: empty block");
  return out;
}

std::vector<std::vector<int>> parse_bars(const std::string& inner) {
  std::vector<std::vector<int>> out;
  if (inner.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = inner.find('|', pos);
    out.push_back(parse_block(inner.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("face transformation not applicable: " + what);
}

std::pair<std::vector<int>, std::vector<int>> cut(const std::vector<int>& b, int x) {
  std::vector<int> lo, hi;
  for (int a : b) {
    if (a <= x) lo.push_back(a);
    if (a >= x) hi.push_back(a);
  }
  return {lo, hi};
}

bool contains(const std::vector<int>& b, int x) { return std::binary_search(b.begin(), b.end(), x); }

}  // namespace

std::string to_string(const NString& s) {
  return bar_list(s, 0, s.l) + join(s.marked()) + bar_list(s, s.l + 1, s.k() + 1);
}

NString parse_nstring(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto fail = [&]() -> NString { throw ValidationError("n-string: cannot parse '" + text + "'"); };
  if (t.empty() || t.front() != '{') return fail();
  std::size_t close = t.find('}');
  if (close == std::string::npos) return fail();
  std::size_t open = t.find('{', close);
  if (open == std::string::npos || t.back() != '}' || t.find('}', open) != t.size() - 1) return fail();
  auto left = parse_bars(t.substr(1, close - 1));
  auto middle = parse_block(t.substr(close + 1, open - close - 1));
  auto right = parse_bars(t.substr(open + 1, t.size() - open - 2));

  NString s;
  s.l = static_cast<int>(left.size());
  s.blocks = std::move(left);
  s.blocks.push_back(std::move(middle));
  for (auto& b : right) s.blocks.push_back(std::move(b));
  s.n = s.blocks.back().back();
  auto bad = s.violations();
  if (!bad.empty()) throw ValidationError("n-string '" + text + "' is invalid: " + bad.front());
  return s;
}

std::string face_kind_name(FaceKind kind) {
  switch (kind) {
    case FaceKind::drop:
      return "drop";
    case FaceKind::inner_break:
      return "inner break";
    case FaceKind::right_outer_break:
      return "right outer break";
    case FaceKind::left_outer_break:
      return "left outer break";
  }
  return "?";
}

NString apply_transformation(const NString& s, const FaceTransformation& t) {
  require(t.block >= 0 && t.block <= s.k(), "block index out of range");
  const auto& b = s.blocks[t.block];
  require(contains(b, t.x), std::to_string(t.x) + " is not in block " + std::to_string(t.block));
  NString r = s;
  switch (t.kind) {
    case FaceKind::drop: {
      require(b.front() < t.x && t.x < b.back(), "drop needs min s_j < x < max s_j");
      auto& rb = r.blocks[t.block];
      rb.erase(std::find(rb.begin(), rb.end(), t.x));
      break;
    }
    case FaceKind::inner_break: {
      require(t.block != s.l, "inner break needs an unmarked block");
      require(b.front() < t.x && t.x < b.back(), "inner break needs min s_j < x < max s_j");
      auto [lo, hi] = cut(b, t.x);
      r.blocks[t.block] = lo;
      r.blocks.insert(r.blocks.begin() + t.block + 1, hi);
      if (t.block < s.l) ++r.l;
      break;
    }
    case FaceKind::right_outer_break: {
      require(t.block == s.l, "outer breaks act on the marked block");
      require(t.x < b.back(), "right outer break needs x < max s_l");
      auto [lo, hi] = cut(b, t.x);
      r.blocks[t.block] = lo;
      r.blocks.insert(r.blocks.begin() + t.block + 1, hi);
      break;
    }
    case FaceKind::left_outer_break: {
      require(t.block == s.l, "outer breaks act on the marked block");
      require(t.x > b.front(), "left outer break needs x > min s_l");
      auto [lo, hi] = cut(b, t.x);
      r.blocks[t.block] = lo;
      r.blocks.insert(r.blocks.begin() + t.block + 1, hi);
      ++r.l;
      break;
    }
  }
  return r;
}

std::vector<FaceTransformation> applicable_transformations(const NString& s) {
  std::vector<FaceTransformation> out;
  for (int j = 0; j <= s.k(); ++j) {
    const auto& b = s.blocks[j];
    for (int x : b) {
      bool inner = b.front() < x && x < b.back();
      if (inner) out.push_back({FaceKind::drop, j, x});
      if (inner && j != s.l) out.push_back({FaceKind::inner_break, j, x});
      if (j == s.l && x < b.back()) out.push_back({FaceKind::right_outer_break, j, x});
      if (j == s.l && x > b.front()) out.push_back({FaceKind::left_outer_break, j, x});
    }
  }
  return out;
}

NString top_string(int n) {
  if (n < 0) throw ValidationError("top_string: n must be nonnegative");
  NString s;
  s.n = n;
  s.blocks.emplace_back();
  for (int v = 0; v <= n; ++v) s.blocks[0].push_back(v);
  return s;
}

CodegeneracyImage codegeneracy(const NString& s, int i) {
  if (i < 0 || i >= s.n) throw ValidationError("codegeneracy: index outside [0, n-1]");
  for (const auto& b : s.blocks)
    if (b.size() > 2) throw ValidationError("codegeneracy: defined on vertex strings only");
  CodegeneracyImage out;
  out.image.n = s.n - 1;
  for (int j = 0; j <= s.k(); ++j) {
    std::vector<int> b;
    for (int a : s.blocks[j]) {
      int v = a <= i ? a : a - 1;
      if (b.empty() || b.back() != v) b.push_back(v);
    }
    bool collapsed = b.size() < s.blocks[j].size();
    out.collapsed = out.collapsed || collapsed;
    if (collapsed && j != s.l) continue;
    if (j == s.l) out.image.l = static_cast<int>(out.image.blocks.size());
    out.image.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace coloop
