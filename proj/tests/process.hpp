#pragma once

// Helpers for driving the CLI binary from tests: locate it via the
// BELLGAUGE_BIN environment variable, run commands through the shell and
// capture exit codes, and stage temporary input files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace test_process {

struct RunResult {
  int exit_code;
  std::string output;
};

inline std::string binary_path() {
  const char* env = std::getenv("BELLGAUGE_BIN");
  if (env && *env) return env;
  return "./tools/bellgauge";  // fallback when run by hand from the build dir
}

/// Run `<bin> <args>` through the shell and capture stdout (stderr is
/// dropped unless merge_stderr). `prefix` can inject environment variables.
inline RunResult run_cli(const std::string& args, bool merge_stderr = false,
                         const std::string& prefix = "") {
  const std::string cmd =
      prefix + binary_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{exit_code, output};
}

inline std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "bellgauge-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string write_temp_file(const std::string& name, const std::string& contents) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  out.close();
  return path.string();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace test_process
