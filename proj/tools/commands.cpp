#include "commands.hpp"

#include <exception>

#include "bianchi/gamma_star.hpp"
#include "bianchi/spin.hpp"
#include "bianchi/verify.hpp"

namespace bianchi::cli {

namespace {

CommandResult failure(std::string message) {
  CommandResult r;
  r.status = Status::error;
  r.payload = Json{{"error", message}};
  r.diagnostics.push_back(std::move(message));
  return r;
}

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const LiftError& e) {
    return failure(std::string("lift failed at stage ") + stage_name(e.stage()) + ": " + e.what());
  } catch (const Json::exception& e) {
    return failure(std::string("malformed JSON: ") + e.what());
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

}  // namespace

CommandResult cmd_vd(std::int64_t m, std::int64_t d) {
  return guarded([&] {
    const FieldParams params = field_params(m);
    const BezoutPair uv = canonical_bezout(params, d);
    Json out = to_json(atkin_lehner(params, d, uv));
    out["u"] = to_string(uv.u);
    out["v"] = to_string(uv.v);
    out["label"] = d;
    return CommandResult{Status::ok, std::move(out), {}};
  });
}

CommandResult cmd_index(std::int64_t m) {
  return guarded([&] {
    const FieldParams params = field_params(m);
    Json out{{"m", m},
             {"d_K", params.d_K},
             {"nu", prime_divisors(params.d_K).size()},
             {"index", index_gamma_star(params)}};
    return CommandResult{Status::ok, std::move(out), {}};
  });
}

CommandResult cmd_table(std::int64_t m) {
  return guarded([&] {
    const FieldParams params = field_params(m);
    const FactorGroupTable table = factor_group_table(params);
    Json labels = Json::array();
    for (const CosetLabel& l : table.labels) labels.push_back(l.d);
    Json rows = Json::array();
    for (const auto& row : table.product) {
      Json r = Json::array();
      for (std::size_t k : row) r.push_back(table.labels[k].d);
      rows.push_back(std::move(r));
    }
    Json out{{"m", m}, {"d_K", params.d_K}, {"labels", std::move(labels)}, {"table", std::move(rows)}};
    return CommandResult{Status::ok, std::move(out), {}};
  });
}

CommandResult cmd_classify(std::string_view input) {
  return guarded([&] {
    const ExtendedMatrix p = extended_matrix_from_json(Json::parse(input));
    if (!is_member_gamma_star(p)) {
      return CommandResult{Status::member_no, Json{{"member", false}}, {}};
    }
    return CommandResult{Status::ok, Json{{"member", true}, {"label", classify_coset(p).d}}, {}};
  });
}

CommandResult cmd_phi(std::string_view input) {
  return guarded([&] {
    const ExtendedMatrix p = extended_matrix_from_json(Json::parse(input));
    const OrthoMap image = phi(p);
    const bool lattice = preserves_lattice(image);
    Json out = to_json(image);
    out["orthogonal"] = in_so0(image);
    out["lattice_preserving"] = lattice;
    out["discriminant_kernel"] = lattice && in_discriminant_kernel(image);
    return CommandResult{Status::ok, std::move(out), {}};
  });
}

CommandResult cmd_lift(std::string_view input) {
  return guarded([&] {
    const OrthoMap p = ortho_map_from_json(Json::parse(input));
    return CommandResult{Status::ok, to_json(spin_lift(p)), {}};
  });
}

CommandResult cmd_verify(const std::vector<std::int64_t>& ms, long height, std::uint64_t seed) {
  return guarded([&] {
    if (ms.empty()) throw std::invalid_argument("verify needs at least one --m");
    VerifyOptions options;
    options.ms = ms;
    options.height = height;
    options.seed = seed;
    const auto results = run_verification(options);
    CommandResult r;
    Json suites = Json::array();
    bool all_ok = true;
    for (const SuiteResult& s : results) {
      Json entry{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
      if (s.counterexample) entry["counterexample"] = *s.counterexample;
      suites.push_back(std::move(entry));
      if (!s.ok()) {
        all_ok = false;
        r.diagnostics.push_back("suite " + s.name + " failed " + std::to_string(s.failed) + " checks");
      }
    }
    r.status = all_ok ? Status::ok : Status::error;
    r.payload = Json{{"ok", all_ok}, {"suites", std::move(suites)}};
    return r;
  });
}

}  // namespace bianchi::cli
