#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rbd {

// Varieties are stored 0-based; every text and CLI surface is 1-based.
using Block = std::vector<int>;
using Replicate = std::vector<Block>;

// A plain block design: v varieties, a list of blocks (each kept sorted).
// Block sizes are not forced to be equal; equal_block_size() reports k or nullopt.
class BlockDesign {
public:
  BlockDesign() = default;
  BlockDesign(int v, std::vector<Block> blocks, std::string label = {});

  int v() const noexcept { return v_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  const std::string& label() const noexcept { return label_; }

  std::optional<int> equal_block_size() const;
  // Replication of every variety when it is constant, otherwise nullopt.
  std::optional<int> equal_replication() const;

  friend bool operator==(const BlockDesign& a, const BlockDesign& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

private:
  int v_ = 0;
  std::vector<Block> blocks_;
  std::string label_;
};

// Ordered replicates, each meant to partition {0..v-1} into v/k blocks of size k.
// The constructor only sorts blocks; validate() reports what is wrong with it.
class ResolvableDesign {
public:
  ResolvableDesign() = default;
  ResolvableDesign(int v, int k, std::vector<Replicate> replicates, std::string label = {});

  int v() const noexcept { return v_; }
  int k() const noexcept { return k_; }
  int r() const noexcept { return static_cast<int>(replicates_.size()); }
  int blocks_per_replicate() const noexcept { return k_ > 0 ? v_ / k_ : 0; }
  const std::vector<Replicate>& replicates() const noexcept { return replicates_; }
  const Replicate& replicate(std::size_t i) const { return replicates_.at(i); }
  const std::string& label() const noexcept { return label_; }

  ResolvableDesign with_label(std::string label) const;
  // Replicates listed in `indices`, in that order.
  ResolvableDesign select(std::span<const int> indices, std::string label = {}) const;
  ResolvableDesign without_replicate(int index) const;
  ResolvableDesign prefix(int count) const;

  // Blocks in replicate-major order.
  BlockDesign as_block_design() const;

  // Label is metadata and is ignored.
  friend bool operator==(const ResolvableDesign& a, const ResolvableDesign& b) {
    return a.v_ == b.v_ && a.k_ == b.k_ && a.replicates_ == b.replicates_;
  }

private:
  int v_ = 0;
  int k_ = 0;
  std::vector<Replicate> replicates_;
  std::string label_;
};

struct Violation {
  enum class Kind {
    NoReplicates,
    BadParameters,
    WrongBlockCount,
    WrongBlockSize,
    VarietyOutOfRange,
    DuplicateInBlock,
    RepeatedInReplicate,
    MissingFromReplicate,
  };
  Kind kind;
  int replicate = -1;  // 0-based, -1 when not applicable
  int block = -1;      // 0-based, -1 when not applicable
  int variety = 0;     // 1-based, 0 when not applicable
  std::string message;
};

std::vector<Violation> validate(const ResolvableDesign& design);
// Throws ValidationError listing every violation.
void require_valid(const ResolvableDesign& design);

// Symmetric v x v concurrence counts; the diagonal holds each variety's replication.
class ConcurrenceMatrix {
public:
  ConcurrenceMatrix() = default;
  explicit ConcurrenceMatrix(int v);
  ConcurrenceMatrix(int v, std::vector<int> entries);

  int v() const noexcept { return v_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * v_ + j]; }
  int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * v_ + j]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  // Distinct off-diagonal values, ascending.
  std::vector<int> off_diagonal_values() const;
  bool is_symmetric() const;

  friend bool operator==(const ConcurrenceMatrix&, const ConcurrenceMatrix&) = default;

private:
  int v_ = 0;
  std::vector<int> entries_;
};

ConcurrenceMatrix concurrence_matrix(const BlockDesign& design);
// Validates first; throws ValidationError on an invalid design.
ConcurrenceMatrix concurrence_matrix(const ResolvableDesign& design);

// Dual of an equireplicate design: one variety per original block, one block per
// original variety listing the blocks that contain it.
struct DualDesign {
  BlockDesign design;
  bool resolvable = false;
  // When resolvable: groups of dual block indices, each group a partition of the dual varieties.
  std::vector<std::vector<int>> resolution;
};

DualDesign dual(const BlockDesign& design);
DualDesign dual(const ResolvableDesign& design);

// Searches for a grouping of the blocks into parallel classes. nullopt when none exists.
std::optional<std::vector<std::vector<int>>> find_resolution(const BlockDesign& design);

}  // namespace rbd
