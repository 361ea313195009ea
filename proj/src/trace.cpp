#include "trace.hpp"

#include "errors.hpp"

namespace gnfakit {

void append_frame(Trace& t, Gnfa graph, std::string message,
                  std::set<std::string> highlights) {
  Frame f;
  f.index = t.frames.size();
  f.graph = std::move(graph);
  f.message = std::move(message);
  f.highlights = std::move(highlights);
  t.frames.push_back(std::move(f));
}

VizCursor::VizCursor(std::shared_ptr<const Trace> trace)
    : trace_(std::move(trace)) {
  if (!trace_ || trace_->frames.empty()) {
    throw Error(ErrorCode::EmptyTrace, "a trace must have at least one frame");
  }
}

const Frame& VizCursor::current() const { return trace_->frames[cursor_]; }

std::size_t VizCursor::frame_count() const { return trace_->frames.size(); }

std::size_t VizCursor::processed_count() const { return cursor_; }

std::size_t VizCursor::unprocessed_count() const {
  return frame_count() - cursor_;
}

std::vector<Frame> VizCursor::processed() const {
  std::vector<Frame> out;
  for (std::size_t i = cursor_; i > 0; --i) {
    out.push_back(trace_->frames[i - 1]);
  }
  return out;
}

std::vector<Frame> VizCursor::unprocessed() const {
  return {trace_->frames.begin() + static_cast<std::ptrdiff_t>(cursor_),
          trace_->frames.end()};
}

VizCursor VizCursor::next() const {
  VizCursor out = *this;
  if (unprocessed_count() > 1) ++out.cursor_;
  return out;
}

VizCursor VizCursor::prev() const {
  VizCursor out = *this;
  if (out.cursor_ > 0) --out.cursor_;
  return out;
}

VizCursor VizCursor::to_end() const {
  VizCursor out = *this;
  out.cursor_ = frame_count() - 1;
  return out;
}

VizCursor VizCursor::to_start() const {
  VizCursor out = *this;
  out.cursor_ = 0;
  return out;
}

const char* const kArrowKeyInstructions =
    "→ next step   ← previous step   ↓ end   ↑ start";

namespace {

constexpr const char* kVioletFill = "#9400D3";

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

}  // namespace

std::string frame_to_dot(const Frame& f) {
  const Gnfa& g = f.graph;
  std::string out;
  out += "digraph gnfa {\n";
  out += "  rankdir=LR;\n";
  out += "  labelloc=\"b\";\n";
  out += "  label=" +
         quoted(f.message + std::string("\n") + kArrowKeyInstructions) + ";\n";
  out += "  node [shape=circle];\n";
  out += "  \"__start\" [shape=point, style=invis];\n";
  for (const auto& s : g.states) {
    std::string attrs;
    if (s == g.final) attrs += "shape=doublecircle";
    if (f.highlights.count(s)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += std::string("style=filled, fillcolor=\"") + kVioletFill + "\"";
    }
    out += "  " + quoted(s);
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  out += "  \"__start\" -> " + quoted(g.start) + ";\n";
  for (const auto& e : g.edges) {
    out += "  " + quoted(e.from) + " -> " + quoted(e.to) +
           " [label=" + quoted(render_regexp(e.label)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gnfakit
