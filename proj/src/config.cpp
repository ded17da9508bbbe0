#include "wick/config.hpp"

#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace wick {

namespace {

// ptree::get with a default swallows conversion failures; a present but
// malformed key must be reported instead.
template <typename T>
T read(const boost::property_tree::ptree& tree, const char* key, const T& fallback) {
  const auto child = tree.get_child_optional(key);
  return child ? child->get_value<T>() : fallback;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

SuiteConfig load_config(const std::filesystem::path& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path.string(), tree);
  } catch (const boost::property_tree::ptree_error& e) {
    throw InvalidArgument("cannot read config " + path.string() + ": " + e.what());
  }

  SuiteConfig c;
  try {
    c.suite = read(tree, "run.suite", c.suite);
    c.seed = read(tree, "run.seed", c.seed);

    c.tol.exact = read(tree, "tolerance.exact", c.tol.exact);
    c.tol.truncation = read(tree, "tolerance.truncation", c.tol.truncation);
    c.tol.spectral = read(tree, "tolerance.spectral", c.tol.spectral);

    c.oscillator.d = read(tree, "oscillator.d", c.oscillator.d);
    c.oscillator.N = read(tree, "oscillator.N", c.oscillator.N);
    c.oscillator.omega = read(tree, "oscillator.omega", c.oscillator.omega);
    c.oscillator.margin = read(tree, "oscillator.margin", c.oscillator.margin);

    c.cylinder.n_theta = read(tree, "cylinder.n_theta", c.cylinder.n_theta);
    c.cylinder.n_t = read(tree, "cylinder.n_t", c.cylinder.n_t);
    c.cylinder.l_theta = read(tree, "cylinder.l_theta", c.cylinder.l_theta);
    c.cylinder.l_t = read(tree, "cylinder.l_t", c.cylinder.l_t);
    c.cylinder.metric = read(tree, "cylinder.metric", c.cylinder.metric);
    c.cylinder.spin = parse_spin_structure(read(tree, "cylinder.spin", std::string(to_string(c.cylinder.spin))));
    c.cylinder.stencil = parse_stencil(read(tree, "cylinder.stencil", std::string(to_string(c.cylinder.stencil))));

    c.sweep.metric = read(tree, "sweep.metric", c.sweep.metric);
    c.sweep.fixed_n_t = read(tree, "sweep.fixed_n_t", c.sweep.fixed_n_t);
    if (auto s = tree.get_optional<std::string>("sweep.bounded_sizes")) c.sweep.bounded_sizes = parse_int_list(*s);
    c.sweep.counter_n_theta = read(tree, "sweep.counter_n_theta", c.sweep.counter_n_theta);
    if (auto s = tree.get_optional<std::string>("sweep.counter_sizes")) c.sweep.counter_sizes = parse_int_list(*s);

    if (auto s = tree.get_optional<std::string>("output.json")) c.json_out = *s;
  } catch (const boost::property_tree::ptree_error& e) {
    throw InvalidArgument("bad value in config " + path.string() + ": " + e.what());
  }
  validate(c);
  return c;
}

void validate(const SuiteConfig& c) {
  if (!(c.tol.exact > 0.0) || !(c.tol.truncation > 0.0) || !(c.tol.spectral > 0.0)) {
    throw InvalidArgument("tolerances must be positive");
  }
}

}  // namespace wick
