#include "network.hpp"

#include <numbers>

#include "errors.hpp"
#include "pbs.hpp"

namespace photonet {

Node& Network::node(const NodeId& id) {
  for (Node& n : nodes) {
    if (n.id == id) return n;
  }
  throw StructureError("unknown node '" + id + "'");
}

const Node& Network::node(const NodeId& id) const {
  for (const Node& n : nodes) {
    if (n.id == id) return n;
  }
  throw StructureError("unknown node '" + id + "'");
}

int input_channel_count(const Node& node) {
  struct Visitor {
    int operator()(const SourceNode&) const { return 0; }
    int operator()(const PbsNode&) const { return 2; }
    int operator()(const HwpNode&) const { return 1; }
    int operator()(const EomNode&) const { return 1; }
    int operator()(const PhaseShiftNode&) const { return 1; }
    int operator()(const WollastonNode&) const { return 1; }
    int operator()(const DetectorNode&) const { return 1; }
    int operator()(const SinkNode&) const { return 1; }
  };
  return std::visit(Visitor{}, node.payload);
}

int output_channel_count(const Node& node) {
  struct Visitor {
    int operator()(const SourceNode&) const { return 1; }
    int operator()(const PbsNode&) const { return 2; }
    int operator()(const HwpNode&) const { return 1; }
    int operator()(const EomNode&) const { return 1; }
    int operator()(const PhaseShiftNode&) const { return 1; }
    int operator()(const WollastonNode&) const { return 2; }
    int operator()(const DetectorNode&) const { return 0; }
    int operator()(const SinkNode&) const { return 0; }
  };
  return std::visit(Visitor{}, node.payload);
}

void Network::validate() const {
  int sources = 0;
  int detectors = 0;
  for (const Node& n : nodes) {
    if (std::holds_alternative<SourceNode>(n.payload)) ++sources;
    if (const auto* det = std::get_if<DetectorNode>(&n.payload)) {
      ++detectors;
      if (det->label != 0 && det->label != 1) {
        throw StructureError("detector '" + n.id + "' must be labeled 0 or 1");
      }
    }
  }
  if (sources != 1) throw StructureError("network must contain exactly one source");
  if (detectors < 1) throw StructureError("network must contain at least one detector");

  for (const Node& n : nodes) {
    for (int ch = 0; ch < output_channel_count(n); ++ch) {
      if (!edges.count({n.id, ch})) {
        throw StructureError("output channel " + std::to_string(ch) + " of '" + n.id +
                             "' is not connected");
      }
    }
  }
  for (const auto& [from, to] : edges) {
    const Node& src = node(from.first);
    if (from.second < 0 || from.second >= output_channel_count(src)) {
      throw StructureError("edge leaves nonexistent output channel of '" + from.first + "'");
    }
    const Node& dst = node(to.first);
    if (to.second < 0 || to.second >= input_channel_count(dst)) {
      throw StructureError("edge enters nonexistent input channel of '" + to.first + "'");
    }
  }
  topological_order(*this);  // throws on a cycle
}

std::vector<const Node*> topological_order(const Network& net) {
  std::map<NodeId, int> indegree;
  for (const Node& n : net.nodes) indegree[n.id] = 0;
  for (const auto& [from, to] : net.edges) {
    (void)from;
    ++indegree.at(to.first);
  }
  std::vector<const Node*> ready;
  for (const Node& n : net.nodes) {
    if (indegree.at(n.id) == 0) ready.push_back(&n);
  }
  std::vector<const Node*> order;
  while (!ready.empty()) {
    const Node* n = ready.back();
    ready.pop_back();
    order.push_back(n);
    for (const auto& [from, to] : net.edges) {
      if (from.first != n->id) continue;
      if (--indegree.at(to.first) == 0) ready.push_back(&net.node(to.first));
    }
  }
  if (order.size() != net.nodes.size()) {
    throw StructureError("network graph contains a cycle");
  }
  return order;
}

Network build_malus_network(double alpha, const RandomStream& master) {
  Network net;
  net.nodes.push_back({"source", SourceNode{}});
  PbsNode pbs;
  pbs.stream = master.split("pbs");
  pbs.dlm = dlm_init(alpha, pbs.stream);
  net.nodes.push_back({"pbs", std::move(pbs)});
  net.nodes.push_back({"d0", DetectorNode{0}});
  net.nodes.push_back({"d1", DetectorNode{1}});
  net.edges[{"source", 0}] = {"pbs", 0};
  net.edges[{"pbs", 0}] = {"d0", 0};
  net.edges[{"pbs", 1}] = {"d1", 0};
  net.validate();
  return net;
}

Network build_wheeler_network(double alpha, const RandomStream& master) {
  constexpr double kQuarter = std::numbers::pi / 4.0;
  Network net;
  net.nodes.push_back({"source", SourceNode{0.0, 0.0, kQuarter}});

  PbsNode pbs_in;
  pbs_in.stream = master.split("pbs_in");
  pbs_in.dlm = dlm_init(alpha, pbs_in.stream);
  net.nodes.push_back({"pbs_in", std::move(pbs_in)});

  net.nodes.push_back({"phase", PhaseShiftNode{0.0}});
  net.nodes.push_back({"hwp0", HwpNode{HwpSetting{kQuarter}}});
  net.nodes.push_back({"hwp1", HwpNode{HwpSetting{kQuarter}}});

  PbsNode pbs_out;
  pbs_out.stream = master.split("pbs_out");
  pbs_out.dlm = dlm_init(alpha, pbs_out.stream);
  net.nodes.push_back({"pbs_out", std::move(pbs_out)});

  net.nodes.push_back({"eom", EomNode{master.split("eom")}});

  WollastonNode wollaston;
  wollaston.stream = master.split("wollaston");
  wollaston.dlm = dlm_init(alpha, wollaston.stream);
  net.nodes.push_back({"wollaston", std::move(wollaston)});

  net.nodes.push_back({"d0", DetectorNode{0}});
  net.nodes.push_back({"d1", DetectorNode{1}});
  net.nodes.push_back({"sink", SinkNode{}});

  net.edges[{"source", 0}] = {"pbs_in", 0};
  net.edges[{"pbs_in", 0}] = {"phase", 0};
  net.edges[{"phase", 0}] = {"hwp0", 0};
  net.edges[{"hwp0", 0}] = {"pbs_out", 0};
  net.edges[{"pbs_in", 1}] = {"hwp1", 0};
  net.edges[{"hwp1", 0}] = {"pbs_out", 1};
  net.edges[{"pbs_out", 1}] = {"eom", 0};
  net.edges[{"eom", 0}] = {"wollaston", 0};
  net.edges[{"wollaston", 0}] = {"d0", 0};
  net.edges[{"wollaston", 1}] = {"d1", 0};
  net.edges[{"pbs_out", 0}] = {"sink", 0};

  net.choice_anchor = "pbs_in";
  net.validate();
  return net;
}

void set_source_polarization(Network& net, double polarization) {
  for (Node& n : net.nodes) {
    if (auto* src = std::get_if<SourceNode>(&n.payload)) {
      src->polarization = polarization;
      net.setting = polarization;
      return;
    }
  }
  throw StructureError("network has no source node");
}

void set_phase_shift(Network& net, double shift) {
  for (Node& n : net.nodes) {
    if (auto* ps = std::get_if<PhaseShiftNode>(&n.payload)) {
      ps->shift = shift;
      net.setting = shift;
      return;
    }
  }
  throw StructureError("network has no phase-shift node");
}

namespace {

Port follow_edge(const Network& net, const Port& from) {
  const auto it = net.edges.find(from);
  if (it == net.edges.end()) {
    throw StructureError("output channel " + std::to_string(from.second) + " of '" +
                         from.first + "' is not connected");
  }
  return it->second;
}

}  // namespace

DetectionRecord route_one_event(Network& net, EomMode mode) {
  DetectionRecord rec;
  rec.setting = net.setting;

  const Node* source = nullptr;
  EomNode* eom = nullptr;
  for (Node& n : net.nodes) {
    if (std::holds_alternative<SourceNode>(n.payload)) source = &n;
    if (auto* e = std::get_if<EomNode>(&n.payload)) eom = e;
  }
  if (!source) throw StructureError("network has no source node");

  std::optional<int> choice;
  if (mode != EomMode::Random) choice = mode == EomMode::Closed ? 1 : 0;
  auto draw_choice = [&eom] { return eom && eom->stream.next_uniform() < 0.5 ? 1 : 0; };

  const auto& src = std::get<SourceNode>(source->payload);
  Message msg = source_emit(src.phase_h, src.phase_v, src.polarization);
  if (net.log_paths) rec.path.push_back(source->id);

  Port cursor = follow_edge(net, {source->id, 0});
  for (std::size_t hops = 0; hops <= net.nodes.size(); ++hops) {
    Node& n = net.node(cursor.first);
    const int in_channel = cursor.second;
    if (net.log_paths) rec.path.push_back(n.id);
    int out_channel = 0;

    if (auto* pbs = std::get_if<PbsNode>(&n.payload)) {
      const PbsOutcome out = pbs_process(pbs->dlm, in_channel, msg, pbs->stream);
      msg = out.message;
      out_channel = out.channel;
      rec.degenerate |= out.degenerate;
      // Delayed choice: the modulator setting for this event is fixed only
      // now that the messenger has left the anchor beam splitter.
      if (!choice && net.choice_anchor == n.id) choice = draw_choice();
    } else if (auto* wollaston = std::get_if<WollastonNode>(&n.payload)) {
      const PbsOutcome out = pbs_process(wollaston->dlm, 0, msg, wollaston->stream);
      msg = out.message;
      out_channel = out.channel;
      rec.degenerate |= out.degenerate;
    } else if (const auto* hwp = std::get_if<HwpNode>(&n.payload)) {
      msg = hwp_apply(msg, hwp->setting.axis_angle);
    } else if (std::holds_alternative<EomNode>(n.payload)) {
      if (!choice) choice = draw_choice();  // graphs without an anchor
      msg = eom_apply(msg, EomSetting{*choice == 1});
    } else if (const auto* ps = std::get_if<PhaseShiftNode>(&n.payload)) {
      msg = phase_shift_apply(msg, ps->shift);
    } else if (const auto* det = std::get_if<DetectorNode>(&n.payload)) {
      rec.detector = det->label;
      rec.eom_choice = choice.value_or(0);
      return rec;
    } else if (std::holds_alternative<SinkNode>(n.payload)) {
      rec.detector = -1;
      rec.eom_choice = choice.value_or(0);
      return rec;
    } else {
      throw StructureError("messenger re-entered the source node '" + n.id + "'");
    }
    cursor = follow_edge(net, {n.id, out_channel});
  }
  throw StructureError("messenger exceeded the hop limit; network contains a cycle");
}

DataSet run_events(Network& net, std::uint64_t n_events, EomMode mode) {
  if (n_events < 1) throw ConfigError("event count must be at least 1");
  net.validate();
  DataSet data;
  data.records.reserve(n_events);
  for (std::uint64_t i = 0; i < n_events; ++i) {
    data.records.push_back(route_one_event(net, mode));
  }
  return data;
}

}  // namespace photonet
