#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qcf::cli {

enum class OutputFormat { text, json, csv };

struct SessionConfig {
    std::int64_t d = 5;
    unsigned precision_bits = 64;
    OutputFormat output = OutputFormat::text;
    std::size_t max_steps = 10000;
    int digits = 30;
};

enum ExitCode : int {
    kOk = 0,
    kParse = 2,
    kPrecondition = 3,
    kMaxSteps = 4,
    kInternal = 5,
};

// Individual commands write their report to `out`. They throw the library
// errors; run() maps those onto exit codes.
void cmd_eval(const std::string& expansion, const SessionConfig& cfg, std::ostream& out);
void cmd_expand(const std::string& a, const std::string& b, const std::string& c, int branch, int conj_branch,
                const SessionConfig& cfg, std::ostream& out);
void cmd_analyze(const std::string& a, const std::string& b, const std::string& c, int branch, int conj_branch,
                 const std::string& expansion, std::size_t steps, const SessionConfig& cfg, std::ostream& out);
void cmd_radius(std::int64_t d, const SessionConfig& cfg, std::ostream& out);

struct CorpusSpec {
    std::size_t count = 10;
    std::int64_t bound = 3;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};
void cmd_corpus(const CorpusSpec& spec, const SessionConfig& cfg, std::ostream& out);

/// Full command line, argv[0] included. Returns the process exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qcf::cli
