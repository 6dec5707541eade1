#include "rbd/design.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rbd/errors.hpp"

namespace rbd {

namespace {

void sort_blocks(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
}

}  // namespace

BlockDesign::BlockDesign(int v, std::vector<Block> blocks, std::string label)
    : v_(v), blocks_(std::move(blocks)), label_(std::move(label)) {
  sort_blocks(blocks_);
}

std::optional<int> BlockDesign::equal_block_size() const {
  if (blocks_.empty()) return std::nullopt;
  const auto k = blocks_.front().size();
  for (const auto& b : blocks_)
    if (b.size() != k) return std::nullopt;
  return static_cast<int>(k);
}

std::optional<int> BlockDesign::equal_replication() const {
  std::vector<int> count(static_cast<std::size_t>(v_), 0);
  for (const auto& b : blocks_)
    for (int x : b) {
      if (x < 0 || x >= v_) return std::nullopt;
      ++count[static_cast<std::size_t>(x)];
    }
  if (count.empty()) return std::nullopt;
  if (std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>()) != count.end())
    return std::nullopt;
  return count.front();
}

ResolvableDesign::ResolvableDesign(int v, int k, std::vector<Replicate> replicates,
                                   std::string label)
    : v_(v), k_(k), replicates_(std::move(replicates)), label_(std::move(label)) {
  for (auto& rep : replicates_) sort_blocks(rep);
}

ResolvableDesign ResolvableDesign::with_label(std::string label) const {
  ResolvableDesign d = *this;
  d.label_ = std::move(label);
  return d;
}

ResolvableDesign ResolvableDesign::select(std::span<const int> indices, std::string label) const {
  std::vector<Replicate> reps;
  reps.reserve(indices.size());
  for (int i : indices) reps.push_back(replicates_.at(static_cast<std::size_t>(i)));
  return ResolvableDesign(v_, k_, std::move(reps), std::move(label));
}

ResolvableDesign ResolvableDesign::without_replicate(int index) const {
  std::vector<int> keep;
  for (int i = 0; i < r(); ++i)
    if (i != index) keep.push_back(i);
  return select(keep, label_.empty() ? std::string{} : label_ + " minus replicate " +
                                                          std::to_string(index + 1));
}

ResolvableDesign ResolvableDesign::prefix(int count) const {
  std::vector<int> keep(static_cast<std::size_t>(std::clamp(count, 0, r())));
  std::iota(keep.begin(), keep.end(), 0);
  return select(keep, label_);
}

BlockDesign ResolvableDesign::as_block_design() const {
  std::vector<Block> blocks;
  for (const auto& rep : replicates_) blocks.insert(blocks.end(), rep.begin(), rep.end());
  return BlockDesign(v_, std::move(blocks), label_);
}

std::vector<Violation> validate(const ResolvableDesign& design) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const int v = design.v();
  const int k = design.k();
  if (v <= 0 || k <= 0 || v % k != 0) {
    out.push_back({K::BadParameters, -1, -1, 0,
                   "v=" + std::to_string(v) + " is not a positive multiple of k=" +
                       std::to_string(k)});
    return out;
  }
  if (design.r() == 0) {
    out.push_back({K::NoReplicates, -1, -1, 0, "design has no replicates"});
    return out;
  }
  const auto expected_blocks = static_cast<std::size_t>(v / k);
  for (int ri = 0; ri < design.r(); ++ri) {
    const auto& rep = design.replicate(static_cast<std::size_t>(ri));
    const std::string where_rep = "replicate " + std::to_string(ri + 1);
    if (rep.size() != expected_blocks)
      out.push_back({K::WrongBlockCount, ri, -1, 0,
                     where_rep + " has " + std::to_string(rep.size()) + " blocks, expected " +
                         std::to_string(expected_blocks)});
    std::vector<int> seen_in(static_cast<std::size_t>(v), -1);
    for (int bi = 0; bi < static_cast<int>(rep.size()); ++bi) {
      const auto& block = rep[static_cast<std::size_t>(bi)];
      const std::string where = where_rep + " block " + std::to_string(bi + 1);
      if (static_cast<int>(block.size()) != k)
        out.push_back({K::WrongBlockSize, ri, bi, 0,
                       where + " has size " + std::to_string(block.size()) + ", expected " +
                           std::to_string(k)});
      for (std::size_t j = 0; j < block.size(); ++j) {
        const int x = block[j];
        if (x < 0 || x >= v) {
          out.push_back({K::VarietyOutOfRange, ri, bi, x + 1,
                         where + " contains variety " + std::to_string(x + 1) +
                             " outside 1.." + std::to_string(v)});
          continue;
        }
        if (j > 0 && block[j - 1] == x) {
          out.push_back({K::DuplicateInBlock, ri, bi, x + 1,
                         where + " repeats variety " + std::to_string(x + 1)});
          continue;
        }
        auto& first = seen_in[static_cast<std::size_t>(x)];
        if (first >= 0) {
          out.push_back({K::RepeatedInReplicate, ri, bi, x + 1,
                         where_rep + ": variety " + std::to_string(x + 1) +
                             " occurs in blocks " + std::to_string(first + 1) + " and " +
                             std::to_string(bi + 1)});
        } else {
          first = bi;
        }
      }
    }
    for (int x = 0; x < v; ++x)
      if (seen_in[static_cast<std::size_t>(x)] < 0)
        out.push_back({K::MissingFromReplicate, ri, -1, x + 1,
                       where_rep + " is missing variety " + std::to_string(x + 1)});
  }
  return out;
}

void require_valid(const ResolvableDesign& design) {
  const auto violations = validate(design);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid design";
  if (!design.label().empty()) msg << " '" << design.label() << "'";
  msg << ":";
  for (const auto& v : violations) msg << "\n  " << v.message;
  throw ValidationError(msg.str());
}

ConcurrenceMatrix::ConcurrenceMatrix(int v)
    : v_(v), entries_(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0) {}

ConcurrenceMatrix::ConcurrenceMatrix(int v, std::vector<int> entries)
    : v_(v), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v))
    throw ShapeError("concurrence matrix needs v*v entries");
}

std::vector<int> ConcurrenceMatrix::off_diagonal_values() const {
  std::vector<int> values;
  for (int i = 0; i < v_; ++i)
    for (int j = 0; j < v_; ++j)
      if (i != j) values.push_back((*this)(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool ConcurrenceMatrix::is_symmetric() const {
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ConcurrenceMatrix concurrence_matrix(const BlockDesign& design) {
  ConcurrenceMatrix lambda(design.v());
  for (const auto& block : design.blocks())
    for (int x : block)
      for (int y : block) ++lambda.at(x, y);
  return lambda;
}

ConcurrenceMatrix concurrence_matrix(const ResolvableDesign& design) {
  require_valid(design);
  return concurrence_matrix(design.as_block_design());
}

std::optional<std::vector<std::vector<int>>> find_resolution(const BlockDesign& design) {
  const auto k = design.equal_block_size();
  const int v = design.v();
  if (!k || *k <= 0 || v % *k != 0) return std::nullopt;
  const int per_class = v / *k;
  const int b = static_cast<int>(design.block_count());
  if (b % per_class != 0) return std::nullopt;

  // Blocks containing each variety, for the "cover the smallest uncovered variety" branching.
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(v));
  for (int i = 0; i < b; ++i)
    for (int x : design.block(static_cast<std::size_t>(i)))
      containing[static_cast<std::size_t>(x)].push_back(i);

  std::vector<char> used(static_cast<std::size_t>(b), 0);
  std::vector<char> covered(static_cast<std::size_t>(v), 0);
  std::vector<std::vector<int>> classes;
  std::vector<int> current;

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(current.size()) == per_class) {
      classes.push_back(current);
      auto saved = current;
      std::fill(covered.begin(), covered.end(), 0);
      current.clear();
      if (static_cast<int>(classes.size()) * per_class == b) return true;
      if (extend()) return true;
      current = std::move(saved);
      classes.pop_back();
      for (int bi : current)
        for (int x : design.block(static_cast<std::size_t>(bi))) covered[static_cast<std::size_t>(x)] = 1;
      return false;
    }
    int target = -1;
    if (current.empty()) {
      // Each class starts at the lowest unused block, fixing the class order.
      for (int i = 0; i < b; ++i)
        if (!used[static_cast<std::size_t>(i)]) {
          target = design.block(static_cast<std::size_t>(i)).front();
          break;
        }
    } else {
      for (int x = 0; x < v; ++x)
        if (!covered[static_cast<std::size_t>(x)]) {
          target = x;
          break;
        }
    }
    const bool first_in_class = current.empty();
    int first_unused = -1;
    if (first_in_class)
      for (int i = 0; i < b; ++i)
        if (!used[static_cast<std::size_t>(i)]) {
          first_unused = i;
          break;
        }
    for (int bi : containing[static_cast<std::size_t>(target)]) {
      if (used[static_cast<std::size_t>(bi)]) continue;
      if (first_in_class && bi != first_unused) continue;
      const auto& block = design.block(static_cast<std::size_t>(bi));
      if (std::any_of(block.begin(), block.end(),
                      [&](int x) { return covered[static_cast<std::size_t>(x)] != 0; }))
        continue;
      used[static_cast<std::size_t>(bi)] = 1;
      for (int x : block) covered[static_cast<std::size_t>(x)] = 1;
      current.push_back(bi);
      if (extend()) return true;
      current.pop_back();
      for (int x : block) covered[static_cast<std::size_t>(x)] = 0;
      used[static_cast<std::size_t>(bi)] = 0;
    }
    return false;
  };

  if (b == 0) return std::nullopt;
  if (!extend()) return std::nullopt;
  return classes;
}

DualDesign dual(const BlockDesign& design) {
  const auto replication = design.equal_replication();
  if (!replication) throw ShapeError("dual requires an equireplicate design");
  std::vector<Block> blocks(static_cast<std::size_t>(design.v()));
  for (std::size_t i = 0; i < design.block_count(); ++i)
    for (int x : design.block(i)) blocks[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
  DualDesign out;
  out.design = BlockDesign(static_cast<int>(design.block_count()), std::move(blocks),
                           design.label().empty() ? std::string{} : "dual of " + design.label());
  if (auto res = find_resolution(out.design)) {
    out.resolvable = true;
    out.resolution = std::move(*res);
  }
  return out;
}

DualDesign dual(const ResolvableDesign& design) {
  require_valid(design);
  return dual(design.as_block_design());
}

}  // namespace rbd
