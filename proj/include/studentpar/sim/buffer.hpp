#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "studentpar/sim/workload.hpp"

namespace studentpar::sim {

struct BufferConfig {
  std::size_t bin_width = 8;
  std::size_t num_bins = 16;
  std::size_t max_len = 128;
  std::size_t max_merge = 4;

  friend bool operator==(const BufferConfig&, const BufferConfig&) = default;
};

void validate(const BufferConfig& config);

// ceil(min(length, max_len) / bin_width) - 1
std::size_t bin_of(std::size_t length, const BufferConfig& config);
std::size_t padded_len(std::size_t bin, const BufferConfig& config);

struct BufferElement {
  std::size_t bin = 0;
  std::vector<Request> requests;
  std::size_t padded_len = 0;
  double enqueued_ms = 0.0;

  friend bool operator==(const BufferElement&, const BufferElement&) = default;
};

enum class PushResult { Merged, Appended, Rejected };

// Bounded FIFO of length-binned elements. Each bin has at most one open
// (non-full) element, found through a bin -> sequence-number index, so push
// and pop touch a constant number of elements regardless of buffer length.
class LengthAwareBuffer {
 public:
  LengthAwareBuffer(BufferConfig config, std::size_t capacity);

  PushResult push(const Request& request, double now_ms);
  BufferElement pop();
  const BufferElement& front() const;
  const BufferElement& at(std::size_t position) const;

  std::size_t size() const { return fifo_.size(); }
  bool empty() const { return fifo_.empty(); }
  bool full() const { return fifo_.size() >= capacity_; }
  std::size_t capacity() const { return capacity_; }
  // Shrinking below the current length only blocks further appends.
  void set_capacity(std::size_t capacity);
  const BufferConfig& config() const { return config_; }

  // Position of the open element for `bin`, if any.
  std::optional<std::size_t> open_position(std::size_t bin) const;

  // Index entries point at existing, non-full elements of their own bin and
  // no element is indexed twice.
  bool check_integrity() const;

  // Elements read or written by the most recent push/pop.
  std::size_t last_touched() const { return last_touched_; }
  std::size_t max_touched() const { return max_touched_; }

 private:
  void touch(std::size_t n);

  BufferConfig config_;
  std::size_t capacity_;
  std::deque<BufferElement> fifo_;
  std::uint64_t head_seq_ = 0;  // sequence number of fifo_.front()
  std::vector<std::optional<std::uint64_t>> index_;
  std::size_t last_touched_ = 0;
  std::size_t max_touched_ = 0;
};

}  // namespace studentpar::sim
