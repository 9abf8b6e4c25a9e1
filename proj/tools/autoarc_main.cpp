#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "autoarc/job.hpp"

using namespace autoarc;

namespace {

int run_command(const std::string& path, const std::string& format_override) {
  Job job = load_job(path);
  if (!format_override.empty()) job.output_format = format_override;
  Report report = run_job(job);
  std::string rendered = render_report(report, job.output_format);
  if (job.output_file) {
    std::ofstream out(*job.output_file, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *job.output_file << "\n";
      return 3;
    }
    out << rendered;
    // A one-line confirmation on stdout keeps batch logs readable.
    std::cout << "wrote " << *job.output_file << "\n";
  } else {
    std::cout << rendered;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autoarc: arc spaces of infinitesimal deformations"};
  app.require_subcommand(1);

  std::string job_path;
  std::string format;
  auto* run = app.add_subcommand("run", "run a job file");
  run->add_option("jobfile", job_path, "job file path")->required();
  run->add_option("--format", format, "override output format (text|json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(job_path, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
