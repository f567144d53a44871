// swingcmp command-line front end: analyze, synth, serve, report.

#include <pthread.h>

#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "swingcmp/error.hpp"
#include "swingcmp/pipeline.hpp"
#include "swingcmp/service.hpp"
#include "swingcmp/synth.hpp"

namespace fs = std::filesystem;
using namespace swingcmp;

namespace {

void print_error(const Error& e) {
  Json ctx = e.context();
  std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what();
  if (!e.context().empty()) std::cerr << " " << ctx.dump();
  std::cerr << "\n";
}

void print_summary(const AnalysisReport& r) {
  std::cout << "frames: " << r.comparisons.size() << " user, path length " << r.path.steps.size() << "\n"
            << "dtw total cost: " << r.path.total_cost << "\n"
            << "threshold: " << r.threshold << " (k=" << r.config.threshold_k << ")\n"
            << "flagged segments: " << r.discrepancy.flagged_segments.size() << "\n";
  for (std::size_t s = 0; s < r.discrepancy.flagged_segments.size(); ++s) {
    const auto& seg = r.discrepancy.flagged_segments[s];
    const auto key = r.discrepancy.key_frames[s];
    std::cout << "  [" << seg.start << ", " << seg.end << "] key frame " << key << " -> expert "
              << r.sync.expert_for_user[key] << ", mpjpe " << r.comparisons[key].mpjpe << "\n";
  }
  std::cout << "correlation with latent distance (all frames):\n";
  for (const auto& [group, coef] : rank_groups(r.correlations_all)) {
    std::cout << "  " << group << ": ";
    if (coef) std::cout << *coef; else std::cout << "undefined";
    std::cout << "\n";
  }
}

int run_serve(std::shared_ptr<SessionService> service, const std::string& host, int port,
              const std::optional<std::string>& assets) {
  HttpServer server(std::move(service), assets ? std::optional<fs::path>(*assets) : std::nullopt);
  const int bound = server.bind(host, port);
  std::cout << "serving on http://" << host << ":" << bound << "/" << std::endl;

  // SIGINT/SIGTERM are taken synchronously by a watcher thread, which stops the server.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
  std::atomic<bool> woken{false};
  std::thread watcher([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    woken = true;
    server.stop();
  });
  server.listen();
  if (!woken) pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare a learner's swing against an expert's: sync, detect discrepancies, compare skeletons."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Run the full analysis and write a report");
  SessionConfig cfg;
  std::string user_emb, expert_emb, out_path;
  bool no_scale = false;
  bool no_club = false;
  analyze->add_option("--user-pose", cfg.user_pose_path, "User pose file")->required();
  analyze->add_option("--expert-pose", cfg.expert_pose_path, "Expert pose file")->required();
  auto* ue = analyze->add_option("--user-emb", user_emb, "User embedding file");
  auto* ee = analyze->add_option("--expert-emb", expert_emb, "Expert embedding file");
  ue->needs(ee);
  ee->needs(ue);
  analyze->add_option("--penalty", cfg.step_penalty, "Non-diagonal DTW step penalty")->check(CLI::NonNegativeNumber);
  analyze->add_option("--k", cfg.threshold_k, "Threshold: mean + k * std");
  analyze->add_option("--min-gap", cfg.min_gap, "Merge flagged runs separated by fewer frames");
  analyze->add_flag("--no-scale", no_scale, "Rigid Procrustes (no scaling)");
  analyze->add_flag("--no-club", no_club, "Ignore club keypoints in proxy embeddings");
  analyze->add_option("--out", out_path, "Report output path")->required();

  // synth
  auto* synth = app.add_subcommand("synth", "Write a synthetic user/expert session");
  std::uint64_t seed = 0;
  std::string preset = "timing";
  std::string warp_text = "identity";
  std::string out_dir;
  synth->add_option("--seed", seed, "Random seed")->required();
  synth->add_option("--preset", preset, "Preset name")->check(CLI::IsMember(synth_preset_names()));
  synth->add_option("--warp", warp_text, "identity or source:target pairs, e.g. 0:0,0.5:0.3,1:1");
  synth->add_option("--out-dir", out_dir, "Output directory")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Serve a session over HTTP");
  std::string serve_report, serve_config, host = "127.0.0.1";
  std::string assets;
  int port = 8080;
  auto* sr = serve->add_option("--report", serve_report, "Report file");
  auto* sc = serve->add_option("--config", serve_config, "Session config file");
  sr->excludes(sc);
  serve->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--assets", assets, "Directory with the built viewer");

  // report
  auto* report = app.add_subcommand("report", "Print a report as JSON or CSV");
  std::string report_in, format = "json";
  report->add_option("--in", report_in, "Report file")->required();
  report->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      if (!user_emb.empty()) {
        cfg.user_emb_path = user_emb;
        cfg.expert_emb_path = expert_emb;
      }
      cfg.with_scale = !no_scale;
      cfg.include_club_in_proxy = !no_club;
      const auto r = run_analysis(cfg);
      write_report(r, out_path);
      print_summary(r);
      std::cout << "report written to " << out_path << "\n";
      return 0;
    }

    if (*synth) {
      const auto p = synth_preset(preset, seed);
      const auto warp = parse_warp_spec(warp_text);
      const fs::path dir(out_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw Error(ErrorCode::IoFailure, "cannot create output directory", {{"dir", out_dir}});

      const auto expert = generate_swing(p.expert);
      const auto user_base = generate_swing(p.user);
      const auto warped = apply_warp(user_base, warp, user_base.size());
      save_pose_sequence(expert, dir / "expert_pose.json");
      save_pose_sequence(warped.sequence, dir / "user_pose.json");
      save_embedding_sequence(coupled_embedding(expert, p.weights, p.embedding_noise, seed + 100),
                              dir / "expert_emb.json");
      save_embedding_sequence(coupled_embedding(warped.sequence, p.weights, p.embedding_noise, seed + 101),
                              dir / "user_emb.json");
      write_text_file(dir / "truth.json", canonical_json(Json{{"warp", format_warp_spec(warp)},
                                                              {"user_to_expert", warped.true_correspondence}}));
      SessionConfig session;
      session.user_pose_path = "user_pose.json";
      session.expert_pose_path = "expert_pose.json";
      session.user_emb_path = "user_emb.json";
      session.expert_emb_path = "expert_emb.json";
      write_text_file(dir / "session.json", canonical_json(to_json(session)));
      std::cout << "wrote synthetic session (" << warped.sequence.size() << " user frames, " << expert.size()
                << " expert frames) to " << dir.string() << "\n";
      return 0;
    }

    if (*serve) {
      std::shared_ptr<SessionService> service;
      if (!serve_config.empty()) {
        const auto session = load_session_config(serve_config);
        const auto inputs = load_session_inputs(session);
        service = std::make_shared<SessionService>(run_analysis(inputs, session));
        service->set_frame_images(inputs.user_pose.frame_images, inputs.expert_pose.frame_images);
      } else if (!serve_report.empty()) {
        auto r = read_report(serve_report);
        service = std::make_shared<SessionService>(r);
        // Image locators live in the pose files; they are optional for serving.
        try {
          service->set_frame_images(load_pose_sequence(r.config.user_pose_path).frame_images,
                                    load_pose_sequence(r.config.expert_pose_path).frame_images);
        } catch (const Error&) {
        }
      } else {
        std::cerr << "error: serve needs --report or --config\n";
        return 2;
      }
      return run_serve(service, host, port, assets.empty() ? std::nullopt : std::optional<std::string>(assets));
    }

    if (*report) {
      const auto r = read_report(report_in);
      if (format == "csv") {
        std::cout << report_to_csv(r);
      } else {
        std::cout << report_to_canonical_string(r);
      }
      return 0;
    }
  } catch (const Error& e) {
    print_error(e);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: INTERNAL: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
