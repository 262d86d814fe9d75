#pragma once

// Closure enumeration of a finite matrix group and bucketing of its elements
// by characteristic polynomial.
//
// Elements are stored packed: every entry of every matrix is an integer
// coefficient vector over Z[zeta_m] with one common denominator D for the
// whole group. A product whose entries are not divisible by D restarts the
// enumeration with a larger D.

#include <cstdint>
#include <vector>

#include "reflectia/groups.hpp"

namespace reflectia {

constexpr std::uint64_t kDefaultElementCap = 4'000'000;
// Groups above this size are only enumerated when explicitly allowed.
constexpr std::uint64_t kLargeGroupThreshold = 1'000'000;

enum class ExecMode { serial, parallel };

struct GenerateOptions {
  std::uint64_t cap = kDefaultElementCap;
  bool allow_large = false;
  ExecMode mode = ExecMode::parallel;
  bool bucket = true;
};

class GroupElements {
 public:
  GroupElements() = default;
  GroupElements(int n, int spec_m, int packed_m, int phi, long scale) : n_(n), spec_m_(spec_m), packed_m_(packed_m), phi_(phi), scale_(scale) {}

  std::size_t size() const { return stride() == 0 ? 0 : data_.size() / stride(); }
  std::size_t stride() const { return static_cast<std::size_t>(n_ * n_ * phi_); }
  int n() const { return n_; }
  int packed_order() const { return packed_m_; }
  int phi() const { return phi_; }
  long scale() const { return scale_; }
  const std::int64_t* raw(std::size_t i) const { return data_.data() + i * stride(); }
  // Decoded element, over the spec's field Q(zeta_m).
  CycMatrix element(std::size_t i) const;

  std::vector<std::int64_t>& data() { return data_; }
  const std::vector<std::int64_t>& data() const { return data_; }

 private:
  int n_ = 0;
  int spec_m_ = 1;
  int packed_m_ = 1;
  int phi_ = 1;
  long scale_ = 1;
  std::vector<std::int64_t> data_;
};

struct EigenBucket {
  // Coefficients of det(x I - w), lowest degree first.
  std::vector<Cyclotomic> key;
  CycMatrix representative;
  std::uint64_t count = 0;
};

struct Enumeration {
  GroupElements elements;
  std::vector<EigenBucket> buckets;  // in order of first appearance
};

// Breadth first closure from the identity under right multiplication by the
// generators, then char-poly bucketing. Throws CapExceeded when the closure
// grows past the cap (or the group is large and not allowed) and
// VerificationFailure when the size disagrees with expected_order.
Enumeration generate(const GroupSpec& spec, const GenerateOptions& opts = {});

// Closure only, no bucketing or order check; exposed for the benchmark.
GroupElements enumerate_elements(const GroupSpec& spec, std::uint64_t cap, ExecMode mode);
std::vector<EigenBucket> bucket_elements(const GroupElements& elems, ExecMode mode);

}  // namespace reflectia
