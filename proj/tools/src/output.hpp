#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace polyurn::cli {

// Thrown for bad input; main() turns it into exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output directory of one run. All target files are declared up front so an
// existing file is reported before any work starts.
class RunOutput {
 public:
  RunOutput(std::filesystem::path dir, bool force);

  // Registers `name` and returns its full path; throws UsageError when the
  // file exists and overwriting was not allowed.
  std::filesystem::path declare(const std::string& name);
  // Creates the directory and checks every declared file.
  void prepare();

  std::ofstream open(const std::string& name) const;
  void write_json(const std::string& name, const nlohmann::json& j) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }
  const std::vector<std::string>& files() const noexcept { return files_; }

 private:
  std::filesystem::path dir_;
  bool force_;
  std::vector<std::string> files_;
};

// Verdicts collected during a run; the process exit code follows all_pass().
struct Verdicts {
  std::map<std::string, bool> flags;

  void set(const std::string& name, bool ok) { flags[name] = ok; }
  void merge(const std::map<std::string, bool>& other);
  bool all_pass() const;
  nlohmann::json to_json() const;
};

}  // namespace polyurn::cli
