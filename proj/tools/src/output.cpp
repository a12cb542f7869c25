#include "output.hpp"

#include <algorithm>

namespace polyurn::cli {

namespace fs = std::filesystem;

RunOutput::RunOutput(fs::path dir, bool force) : dir_(std::move(dir)), force_(force) {}

fs::path RunOutput::declare(const std::string& name) {
  if (std::find(files_.begin(), files_.end(), name) == files_.end()) files_.push_back(name);
  return dir_ / name;
}

void RunOutput::prepare() {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw UsageError("cannot create output directory " + dir_.string() + ": " + ec.message());
  if (force_) return;
  for (const auto& f : files_) {
    if (fs::exists(dir_ / f)) {
      throw UsageError((dir_ / f).string() + " already exists; pass --force to overwrite or choose another --out");
    }
  }
}

std::ofstream RunOutput::open(const std::string& name) const {
  std::ofstream out(dir_ / name);
  if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
  return out;
}

void RunOutput::write_json(const std::string& name, const nlohmann::json& j) const {
  auto out = open(name);
  out << j.dump(2) << '\n';
}

void Verdicts::merge(const std::map<std::string, bool>& other) {
  for (const auto& [k, v] : other) flags[k] = v;
}

bool Verdicts::all_pass() const {
  return std::all_of(flags.begin(), flags.end(), [](const auto& kv) { return kv.second; });
}

nlohmann::json Verdicts::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : flags) j[k] = v;
  return j;
}

}  // namespace polyurn::cli
