#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CLI_BINARY
#error "CLI_BINARY must point at the built blaschke_cli executable"
#endif

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("blaschke_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze a reference example") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  const fs::path out = dir.path / "portrait.json";
  write_file(cfg, R"({"command": "analyze", "input": {"family": "deg2_conjugate"},
                      "output_path": ")" + out.string() + R"("})");
  CHECK(run_cli(cfg.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("\"N\":5") != std::string::npos);
}

TEST_CASE("identical configs produce byte-identical output") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  const fs::path out1 = dir.path / "scan1.csv";
  const fs::path out2 = dir.path / "scan2.csv";
  write_file(cfg, R"({"command": "scan",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [16, 32, 64, 128], "format": "csv"})");
  CHECK(run_cli(cfg.string() + " --output " + out1.string()) == 0);
  CHECK(run_cli(cfg.string() + " --output " + out2.string()) == 0);
  const std::string a = read_file(out1);
  CHECK(a == read_file(out2));
  CHECK(a.rfind("n,sup,argmax_k,l1,l2\n", 0) == 0);
}

TEST_CASE("validation failures exit 2 and leave no partial output") {
  TempDir dir;
  const fs::path cfg = dir.path / "bad.json";
  const fs::path out = dir.path / "never.json";

  write_file(cfg, R"({"command": "analyze", "input": {"zeros": []},
                      "output_path": ")" + out.string() + R"("})");
  CHECK(run_cli(cfg.string()) == 2);
  CHECK_FALSE(fs::exists(out));

  write_file(cfg, R"({"input": {"zeros": [{"re": 0.5, "im": 0.0}]}})");
  CHECK(run_cli(cfg.string()) == 2);

  write_file(cfg, R"({"command": "scan",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [8, 8]})");
  CHECK(run_cli(cfg.string()) == 2);

  write_file(cfg, R"({"command": "scan",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [8, 16], "eps": 0.5})");
  CHECK(run_cli(cfg.string()) == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  write_file(cfg, R"({"command": "scan",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [4096], "max_samples": 1024})");
  CHECK(run_cli(cfg.string()) == 3);
}

TEST_CASE("example construction emits the product JSON") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  const fs::path out = dir.path / "product.json";
  write_file(cfg, R"({"command": "example",
                      "input": {"family": "deg2_real"},
                      "output_path": ")" + out.string() + R"("})");
  CHECK(run_cli(cfg.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("\"zeros\"") != std::string::npos);
  CHECK(text.find("-0.333333") != std::string::npos);
}

TEST_CASE("schaffer command emits the normative CSV header") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  const fs::path out = dir.path / "report.csv";
  write_file(cfg, R"({"command": "schaffer",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [8, 16], "format": "csv",
                      "output_path": ")" + out.string() + R"("})");
  CHECK(run_cli(cfg.string()) == 0);
  CHECK(read_file(out).rfind("n,N,e_peak,g0_mod,sinv_lb,det_mod,ratio,phi_lb\n", 0) == 0);
}

TEST_CASE("predict command reports prediction rows") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  const fs::path out = dir.path / "predict.json";
  write_file(cfg, R"({"command": "predict",
                      "input": {"zeros": [{"re": 0.5, "im": 0.0}]},
                      "n_list": [256], "output_path": ")" + out.string() + R"("})");
  CHECK(run_cli(cfg.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("\"prediction\"") != std::string::npos);
  CHECK(text.find("\"rel_err\"") != std::string::npos);
  CHECK(text.find("\"scan\"") != std::string::npos);
}

TEST_SUITE_END();
