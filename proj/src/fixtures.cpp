// SPDX-License-Identifier: Apache-2.0
#include "carver/fixtures.hpp"

#include <json.hpp>

#include "carver/errors.hpp"

namespace carver::fixtures {

using nlohmann::json;

namespace {

struct Doc {
  json j;

  Doc(const std::string& input_id, std::vector<int> shape) {
    j["inputs"] = json::array({{{"id", input_id}, {"shape", shape}}});
    j["nodes"] = json::array();
    j["outputs"] = json::array();
  }
  void node(const std::string& id, const std::string& op, json attrs,
            std::vector<std::string> inputs) {
    json n;
    n["id"] = id;
    n["op"] = op;
    if (!attrs.empty()) n["attrs"] = attrs;
    n["inputs"] = inputs;
    j["nodes"].push_back(n);
  }
  void conv(const std::string& id, int in, int out, const std::string& src) {
    node(id, "Conv2d",
         {{"in_channels", in}, {"out_channels", out}, {"kernel", 3}, {"stride", 1}, {"padding", 1}},
         {src});
  }
  void bn(const std::string& id, int ch, const std::string& src) {
    node(id, "BatchNorm", {{"channels", ch}}, {src});
  }
  void output(const std::string& id, const std::string& src) {
    node(id, "Output", {}, {src});
    j["outputs"].push_back(id);
  }
  std::string dump() const { return j.dump(2) + "\n"; }
};

std::string demonet_s() {
  Doc d("input", {1, 28, 28});
  d.conv("conv1", 1, 16, "input");
  d.bn("bn1", 16, "conv1");
  // branch A
  d.conv("conv2", 16, 16, "bn1");
  d.bn("bn2", 16, "conv2");
  // branch B
  d.node("maxpool1", "MaxPool", {{"kernel", 3}, {"stride", 1}, {"padding", 1}}, {"bn1"});
  d.conv("conv3", 16, 16, "maxpool1");
  d.bn("bn3", 16, "conv3");
  // branch C
  d.node("avgpool1", "AvgPool", {{"kernel", 3}, {"stride", 1}, {"padding", 1}}, {"bn1"});
  d.conv("conv4", 16, 16, "avgpool1");
  d.bn("bn4", 16, "conv4");
  d.conv("conv5", 16, 16, "bn4");
  d.bn("bn5", 16, "conv5");
  d.node("concat1", "Concat", {{"axis", 1}}, {"bn2", "bn3", "bn5"});
  d.conv("conv6", 48, 32, "concat1");
  d.bn("bn6", 32, "conv6");
  d.conv("conv7", 32, 32, "bn6");
  d.bn("bn7", 32, "conv7");
  d.conv("conv8", 32, 32, "bn6");
  d.bn("bn8", 32, "conv8");
  d.node("add1", "Add", {}, {"bn7", "bn8"});
  d.node("gap1", "GlobalAvgPool", {}, {"add1"});
  d.node("linear1", "Linear", {{"in_features", 32}, {"out_features", 10}}, {"gap1"});
  d.output("output", "linear1");
  return d.dump();
}

std::string chain_net() {
  Doc d("input", {1, 28, 28});
  d.conv("conv1", 1, 8, "input");
  d.bn("bn1", 8, "conv1");
  d.node("relu1", "ReLU", {}, {"bn1"});
  d.node("gap1", "GlobalAvgPool", {}, {"relu1"});
  d.node("linear1", "Linear", {{"in_features", 8}, {"out_features", 10}}, {"gap1"});
  d.output("output", "linear1");
  return d.dump();
}

std::string diamond_net() {
  Doc d("input", {1, 28, 28});
  d.conv("conv0", 1, 8, "input");
  d.bn("bn0", 8, "conv0");
  d.conv("conv_a", 8, 8, "bn0");
  d.bn("bn_a", 8, "conv_a");
  d.conv("conv_b", 8, 8, "bn0");
  d.bn("bn_b", 8, "conv_b");
  d.node("add1", "Add", {}, {"bn_a", "bn_b"});
  d.node("gap1", "GlobalAvgPool", {}, {"add1"});
  d.node("linear1", "Linear", {{"in_features", 8}, {"out_features", 10}}, {"gap1"});
  d.output("output", "linear1");
  return d.dump();
}

// Two parallel branches, each with an internal skip Concat, joined by Add.
std::string stacked_unets_mini() {
  Doc d("input", {1, 14, 14});
  auto branch = [&](const std::string& p, const std::string& pool_op) {
    d.conv(p + "_enc", 1, 8, "input");
    d.bn(p + "_enc_bn", 8, p + "_enc");
    d.node(p + "_pool", pool_op, {{"kernel", 3}, {"stride", 1}, {"padding", 1}},
           {p + "_enc_bn"});
    d.conv(p + "_deep", 8, 8, p + "_pool");
    d.bn(p + "_deep_bn", 8, p + "_deep");
    d.node(p + "_cat", "Concat", {{"axis", 1}}, {p + "_enc_bn", p + "_deep_bn"});
    d.conv(p + "_dec", 16, 8, p + "_cat");
    d.bn(p + "_dec_bn", 8, p + "_dec");
  };
  branch("ua", "MaxPool");
  branch("ub", "AvgPool");
  d.node("add_join", "Add", {}, {"ua_dec_bn", "ub_dec_bn"});
  d.node("gap1", "GlobalAvgPool", {}, {"add_join"});
  d.node("linear1", "Linear", {{"in_features", 8}, {"out_features", 10}}, {"gap1"});
  d.output("output", "linear1");
  return d.dump();
}

// Small net touching every operator in the registry; used by gradient checks.
std::string opcheck_net() {
  Doc d("input", {2, 5, 5});
  d.conv("conv1", 2, 3, "input");
  d.bn("bn1", 3, "conv1");
  d.node("relu1", "ReLU", {}, {"bn1"});
  d.node("mp1", "MaxPool", {{"kernel", 3}, {"stride", 1}, {"padding", 1}}, {"relu1"});
  d.node("ap1", "AvgPool", {{"kernel", 3}, {"stride", 1}, {"padding", 1}}, {"relu1"});
  d.node("concat1", "Concat", {{"axis", 1}}, {"mp1", "ap1"});
  d.conv("conv2", 6, 4, "concat1");
  d.node("gap1", "GlobalAvgPool", {}, {"conv2"});
  d.node("flat1", "Flatten", {}, {"conv2"});
  d.node("linear1", "Linear", {{"in_features", 100}, {"out_features", 4}}, {"flat1"});
  d.node("add1", "Add", {}, {"gap1", "linear1"});
  d.node("linear2", "Linear", {{"in_features", 4}, {"out_features", 3}}, {"add1"});
  d.output("output", "linear2");
  return d.dump();
}

}  // namespace

std::vector<std::string> names() {
  return {"demonet-s", "chain-net", "diamond-net", "stacked-unets-mini", "opcheck-net"};
}

std::string model_json(const std::string& name) {
  if (name == "demonet-s") return demonet_s();
  if (name == "chain-net") return chain_net();
  if (name == "diamond-net") return diamond_net();
  if (name == "stacked-unets-mini") return stacked_unets_mini();
  if (name == "opcheck-net") return opcheck_net();
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace carver::fixtures
