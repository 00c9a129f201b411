#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dlm.hpp"
#include "message.hpp"
#include "optics.hpp"
#include "rng.hpp"

namespace photonet {

using NodeId = std::string;
using Port = std::pair<NodeId, int>;  // (node, channel)

struct SourceNode {
  double phase_h = 0.0;
  double phase_v = 0.0;
  double polarization = 0.0;
};
struct PbsNode {
  DlmState dlm;
  RandomStream stream;
};
struct HwpNode {
  HwpSetting setting;
};
struct EomNode {
  RandomStream stream;  // drawn once per event in random mode
};
struct PhaseShiftNode {
  double shift = 0.0;
};
// Single-input beam splitter separating the polarization components onto two
// detectors; runs the same processor as PbsNode with arrivals on channel 0.
struct WollastonNode {
  DlmState dlm;
  RandomStream stream;
};
struct DetectorNode {
  int label = 0;  // 0 or 1
};
// Counted terminal for a nominally dark channel.
struct SinkNode {};

using NodePayload = std::variant<SourceNode, PbsNode, HwpNode, EomNode, PhaseShiftNode,
                                 WollastonNode, DetectorNode, SinkNode>;

struct Node {
  NodeId id;
  NodePayload payload;
};

// One messenger's fate: which detector fired (-1 for the exceptional sink),
// the modulator choice in force, the sweep setting at emission time, and
// whether any hop hit a vanishing-norm fallback.
struct DetectionRecord {
  int detector = -1;
  int eom_choice = 0;
  double setting = 0.0;  // radians
  bool degenerate = false;
  std::vector<NodeId> path;  // visited nodes; filled only when logging is on

  bool exceptional() const { return detector < 0; }
};

struct DataSet {
  std::vector<DetectionRecord> records;
};

enum class EomMode { Open, Closed, Random };

// Directed graph of component nodes.  Exactly one messenger is in flight at a
// time; a network instance must be driven from a single thread.
struct Network {
  std::vector<Node> nodes;
  std::map<Port, Port> edges;  // (node, output channel) -> (node, input channel)
  // The unit after which the per-event modulator choice is fixed (the first
  // beam splitter of a delayed-choice preset).
  std::optional<NodeId> choice_anchor;
  double setting = 0.0;  // current sweep setting, radians
  bool log_paths = false;

  Node& node(const NodeId& id);
  const Node& node(const NodeId& id) const;
  void validate() const;  // throws StructureError
};

int input_channel_count(const Node& node);
int output_channel_count(const Node& node);

// Nodes ordered so that every edge points forward; throws StructureError on a
// cycle.
std::vector<const Node*> topological_order(const Network& net);

// Source feeding one beam splitter whose outputs terminate on two detectors.
Network build_malus_network(double alpha, const RandomStream& master);

// Two-arm interferometer preset: the input beam splitter feeds a phase
// shifter plus half-wave plate on arm 0 and a half-wave plate on arm 1, the
// arms recombine on a second beam splitter whose bright output passes the
// modulator and a Wollaston prism onto two detectors; the nominally dark
// output is a counted sink.
Network build_wheeler_network(double alpha, const RandomStream& master);

void set_source_polarization(Network& net, double polarization);
void set_phase_shift(Network& net, double shift);

// Emits one messenger at the source, applies each node it reaches (beam
// splitters mutate their adaptive state), and returns where it ended up.  In
// random mode the modulator choice is drawn from the modulator's stream only
// once the messenger has left the anchor beam splitter.
DetectionRecord route_one_event(Network& net, EomMode mode);

// n_events sequential route_one_event calls; adaptive state persists.
DataSet run_events(Network& net, std::uint64_t n_events, EomMode mode);

}  // namespace photonet
