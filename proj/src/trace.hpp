#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gnfa.hpp"

namespace gnfakit {

// One snapshot of a transformation step.
struct Frame {
  std::size_t index;
  Gnfa graph;
  std::string message;
  std::set<std::string> highlights;  // subset of graph.states
};

// Ordered, nonempty frame sequence with contiguous indices.
struct Trace {
  std::vector<Frame> frames;
};

// Appends a frame, assigning the next index.
void append_frame(Trace& t, Gnfa graph, std::string message,
                  std::set<std::string> highlights);

// Navigation over a trace as a processed/unprocessed frame split: the head
// of the unprocessed list is the current frame. Operations return new
// cursors and saturate at the boundaries.
class VizCursor {
public:
  explicit VizCursor(std::shared_ptr<const Trace> trace);  // throws on empty

  const Frame& current() const;
  std::size_t frame_count() const;
  std::size_t processed_count() const;    // == current frame index
  std::size_t unprocessed_count() const;  // always >= 1

  std::vector<Frame> processed() const;    // most recent first
  std::vector<Frame> unprocessed() const;  // current first

  VizCursor next() const;
  VizCursor prev() const;
  VizCursor to_end() const;
  VizCursor to_start() const;

  friend bool operator==(const VizCursor& a, const VizCursor& b) {
    return a.trace_ == b.trace_ && a.cursor_ == b.cursor_;
  }

private:
  std::shared_ptr<const Trace> trace_;
  std::size_t cursor_ = 0;
};

// Fixed instruction line shown at the bottom of every rendered frame.
extern const char* const kArrowKeyInstructions;

// Deterministic DOT digraph for one frame: a node per state, an inbound
// arrow from an invisible point node to the start, a double circle on the
// final, violet fill on highlighted states, and the message plus the
// arrow-key instructions as the bottom graph label.
std::string frame_to_dot(const Frame& f);

}  // namespace gnfakit
