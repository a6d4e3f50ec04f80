// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matflat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "matflat/error.hpp"
#include "matflat/flats.hpp"
#include "matflat/geometry.hpp"
#include "matflat/gf_field.hpp"
#include "matflat/matroid_json.hpp"
#include "matflat/minor_scan.hpp"
#include "matflat/qbinom.hpp"
#include "matflat/simd/kernels.hpp"
#include "matflat/verify.hpp"

namespace matflat::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "table";
  unsigned threads = 1;
  std::size_t cap = kDefaultFlatCap;
  std::string simd = "auto";

  EnumOptions enum_options() const { return {cap, threads}; }
  bool json() const { return format == "json"; }
};

// Options applied to a loaded matroid before the command runs.
struct MinorOptions {
  std::string contract;
  std::string remove;
  bool simplify = false;
};

ElementSet parse_set(const std::string& text) {
  ElementSet s;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || e < 0 || e >= kMaxElements)
      throw Error(ErrorKind::kInvalidArgument, "bad element \"" + token + "\" in set list \"" + text + "\"");
    s.insert(e);
  }
  return s;
}

void add_minor_options(CLI::App* sub, MinorOptions& mo) {
  sub->add_option("--contract", mo.contract, "Comma-separated elements to contract first");
  sub->add_option("--delete", mo.remove, "Comma-separated elements to delete first");
  sub->add_flag("--simplify", mo.simplify, "Simplify after contraction and deletion");
}

MatroidPtr load_with_minors(const std::string& path, const MinorOptions& mo) {
  MatroidPtr m = load_matroid(path);
  const ElementSet c = parse_set(mo.contract);
  const ElementSet d = parse_set(mo.remove);
  if (!(c | d).is_subset_of(m->ground()))
    throw Error(ErrorKind::kInvalidArgument, "--contract/--delete name elements outside the ground set");
  if (c.intersects(d)) throw Error(ErrorKind::kInvalidArgument, "--contract and --delete overlap");
  // One minor, so both lists use the file's labels.
  if (!c.empty() || !d.empty()) m = std::make_shared<MinorView>(m, c, d);
  if (mo.simplify) m = simplify(m).matroid;
  return m;
}

Json set_json(const ElementSet& s) { return s.to_vector(); }

std::string set_line(const ElementSet& s) {
  std::string out;
  for (int e : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kIo:
    case ErrorKind::kParse:
      return kExitFile;
    case ErrorKind::kResourceLimit:
      return kExitResource;
    case ErrorKind::kNotInClass:
      return kExitData;
    case ErrorKind::kInternal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

GeometryFamily parse_family(const std::string& name) {
  if (name == "pg") return GeometryFamily::kPG;
  if (name == "ag") return GeometryFamily::kAG;
  if (name == "blokhuis") return GeometryFamily::kBlokhuis;
  if (name == "pgfree") return GeometryFamily::kPGPlusFreePoint;
  throw Error(ErrorKind::kInvalidArgument, "unknown family \"" + name + "\"");
}

void write_or_print(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc.dump() << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::kIo, "cannot write " + path);
  f << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"matflat: flats of matroids, finite geometries and uniform-minor bounds"};
  app.name("matflat");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", common.threads, "Worker threads for lattice scans")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", common.cap, "Largest allowed number of flats in one level");
  app.add_option("--simd", common.simd, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // construct
  auto* construct = app.add_subcommand("construct", "Build PG, AG, M(q) or PG(2,q) plus a free point");
  std::string family, output;
  int c_r = 3, c_q = 2;
  construct->add_option("family", family, "pg | ag | blokhuis | pgfree")->required();
  construct->add_option("--r", c_r, "Rank (pg, ag)");
  construct->add_option("--q", c_q, "Field order")->required();
  construct->add_option("-o,--output", output, "Output file (default stdout)");

  // flats
  auto* flats = app.add_subcommand("flats", "Count or list the flats of a matroid");
  std::string f_file;
  std::optional<int> f_k, f_through;
  bool f_list = false, f_predict = false;
  MinorOptions f_minor;
  flats->add_option("file", f_file, "Matroid JSON file")->required();
  flats->add_option("--k", f_k, "Rank of the flats (default: every rank)");
  flats->add_flag("--list", f_list, "Print the flats themselves");
  flats->add_option("--through", f_through, "Split rank-k flats by whether they contain this element");
  flats->add_flag("--predict", f_predict, "Print the a-priori bound on the level size first");
  add_minor_options(flats, f_minor);

  // qbinom
  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial coefficient [r k]_q");
  int qb_q = 2, qb_r = 0, qb_k = 0;
  bool qb_check = false;
  std::string qb_route = "product";
  qb->add_option("q", qb_q)->required();
  qb->add_option("r", qb_r)->required();
  qb->add_option("k", qb_k)->required();
  qb->add_flag("--check", qb_check, "Also check the three standard inequalities/identities");
  qb->add_option("--route", qb_route, "Evaluation route")->check(CLI::IsMember({"product", "recursive"}));

  // minor
  auto* minor = app.add_subcommand("minor", "Longest U_{2,n}-minor via height-2 intervals");
  std::string m_file;
  bool m_max_line = false, m_verify = false;
  std::optional<int> m_early;
  MinorOptions m_minor;
  minor->add_option("file", m_file)->required();
  minor->add_flag("--max-line", m_max_line, "Report the longest line of any minor")->required();
  minor->add_option("--early-exit", m_early, "Stop once a line of this length is found");
  minor->add_flag("--verify", m_verify, "Recount the witness by contraction and simplification");
  add_minor_options(minor, m_minor);

  // check
  auto* check = app.add_subcommand("check", "Check Kung's bound and the Whitney-number bound in U(ell)");
  std::string ch_file;
  int ch_ell = 2;
  std::optional<int> ch_k;
  MinorOptions ch_minor;
  check->add_option("file", ch_file)->required();
  check->add_option("--ell", ch_ell, "Exclude U_{2,ell+2}")->required()->check(CLI::Range(2, 1 << 20));
  check->add_option("--k", ch_k, "Rank of the flats (default: every rank)");
  add_minor_options(check, ch_minor);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run every checkable claim and print the report");
  std::string v_profile = "quick", v_out;
  verify->add_option("--profile", v_profile)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--out", v_out, "Also write the JSON report to this path");

  // rank / closure
  auto* rank = app.add_subcommand("rank", "Rank and closure of a subset");
  std::string r_file, r_set;
  MinorOptions r_minor;
  rank->add_option("file", r_file)->required();
  rank->add_option("--set", r_set, "Comma-separated elements");
  add_minor_options(rank, r_minor);

  // simplify
  auto* simp = app.add_subcommand("simplify", "Parallel classes and simplification");
  std::string s_file;
  MinorOptions s_minor;
  simp->add_option("file", s_file)->required();
  add_minor_options(simp, s_minor);

  // represent
  auto* represent = app.add_subcommand("represent", "Is a simple rank <= 3 matroid a restriction of PG(2,q)?");
  std::string rp_file;
  int rp_q = 2;
  MinorOptions rp_minor;
  represent->add_option("file", rp_file)->required();
  represent->add_option("--q", rp_q)->required();
  add_minor_options(represent, rp_minor);

  // identities
  auto* ident = app.add_subcommand("identities", "Check the four Whitney-number identities at (k, e)");
  std::string id_file;
  int id_k = 1, id_e = 0;
  std::optional<int> id_ell;
  MinorOptions id_minor;
  ident->add_option("file", id_file)->required();
  ident->add_option("--k", id_k)->required();
  ident->add_option("--e", id_e)->required();
  ident->add_option("--ell", id_ell, "Class parameter for the W_k < ell^{kr} check");
  add_minor_options(ident, id_minor);

  // corollary
  auto* cor = app.add_subcommand("corollary", "Rank-3 counterexample chain for a prime power q > 125");
  std::uint64_t cor_q = 127;
  cor->add_option("--q", cor_q)->required();

  // field
  auto* field = app.add_subcommand("field", "GF(q) tables and moduli");
  std::optional<int> fd_q;
  bool fd_tables = false, fd_all = false;
  field->add_option("q", fd_q);
  field->add_flag("--tables", fd_tables, "Print the addition and multiplication tables");
  field->add_flag("--all", fd_all, "Markdown table of the modulus for every supported q");

  // largest prime power
  auto* lpp = app.add_subcommand("lpp", "Largest prime power not exceeding ell");
  std::uint64_t lpp_ell = 2;
  lpp->add_option("ell", lpp_ell)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "matflat: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (common.simd == "scalar") {
      simd::set_active_backend(simd::Backend::kScalar);
    } else if (common.simd == "avx2") {
      if (!simd::set_active_backend(simd::Backend::kAvx2)) {
        err << "matflat: avx2 kernels are not available on this machine\n";
        return kExitUsage;
      }
    }
    const EnumOptions opts = common.enum_options();

    if (*construct) {
      const GeometrySpec spec{parse_family(family), c_r, c_q};
      const MatroidPtr m = build_geometry(spec);
      if (output.empty() || output == "-")
        out << matroid_to_json(*m).dump() << "\n";
      else
        save_matroid(*m, output);
      return kExitOk;
    }

    if (*flats) {
      const MatroidPtr m = load_with_minors(f_file, f_minor);
      const int top = f_k ? *f_k : m->full_rank();
      if (top < 0 || top > m->full_rank())
        throw Error(ErrorKind::kInvalidArgument, "--k must lie in 0.." + std::to_string(m->full_rank()));
      if (f_predict && !common.json())
        out << "# predicted W_" << top << " <= " << predicted_level_bound(*m, top).str() << "\n";
      const FlatLevels levels = enumerate_flats(*m, top, opts);
      const int lo = f_k ? *f_k : 0;
      if (f_through) {
        if (!f_k) throw Error(ErrorKind::kInvalidArgument, "--through needs --k");
        const auto through = flats_through(*m, *f_k, *f_through, opts);
        const std::size_t avoiding = levels.count(*f_k) - through.size();
        if (common.json()) {
          Json j{{"schema", 1}, {"k", *f_k}, {"e", *f_through}, {"through", through.size()}, {"avoiding", avoiding}};
          if (f_list) {
            j["flats_through"] = Json::array();
            for (const auto& f : through) j["flats_through"].push_back(set_json(f.members));
          }
          out << j.dump() << "\n";
        } else {
          out << "through " << through.size() << "\navoiding " << avoiding << "\n";
          if (f_list)
            for (const auto& f : through) out << set_line(f.members) << "\n";
        }
        return kExitOk;
      }
      if (common.json()) {
        Json j{{"schema", 1}, {"rank", m->full_rank()}, {"size", m->size()}};
        Json counts = Json::object();
        for (int k = lo; k <= top; ++k) counts[std::to_string(k)] = levels.count(k);
        j["whitney"] = counts;
        if (f_list) {
          Json lv = Json::object();
          for (int k = lo; k <= top; ++k) {
            Json arr = Json::array();
            for (const auto& f : levels.levels[k]) arr.push_back(set_json(f));
            lv[std::to_string(k)] = arr;
          }
          j["flats"] = lv;
        }
        out << j.dump() << "\n";
      } else if (f_k) {
        if (f_list)
          for (const auto& f : levels.levels[*f_k]) out << set_line(f) << "\n";
        else
          out << levels.count(*f_k) << "\n";
      } else {
        for (int k = 0; k <= top; ++k) {
          out << "W_" << k << " " << levels.count(k) << "\n";
          if (f_list)
            for (const auto& f : levels.levels[k]) out << "  " << set_line(f) << "\n";
        }
      }
      return kExitOk;
    }

    if (*qb) {
      if (qb_q < 2 || qb_r < 0) throw Error(ErrorKind::kInvalidArgument, "qbinom needs q >= 2 and r >= 0");
      const BigInt v = qb_route == "recursive" ? qbinom_recursive(qb_q, qb_r, qb_k).value
                                               : qbinom_product(qb_q, qb_r, qb_k).value;
      if (!qb_check) {
        if (common.json())
          out << Json{{"q", qb_q}, {"r", qb_r}, {"k", qb_k}, {"value", v.str()}}.dump() << "\n";
        else
          out << v.str() << "\n";
        return kExitOk;
      }
      const Report rep = check_qb_properties(qb_q, qb_r, qb_k);
      if (common.json())
        out << report_to_json(rep, false).dump() << "\n";
      else
        out << v.str() << "\n" << report_to_table(rep);
      return any_failed(rep) ? kExitClaimFailed : kExitOk;
    }

    if (*minor) {
      const MatroidPtr m = load_with_minors(m_file, m_minor);
      const LineLengthReport lr = max_line_length(*m, m_early, opts);
      const bool verified = !m_verify || !lr.witness || verify_witness(m, *lr.witness);
      if (common.json()) {
        Json j{{"schema", 1}, {"max_line_length", lr.max_line_length}, {"early_exit", lr.early_exit}};
        j["witness"] = lr.witness ? witness_to_json(*lr.witness) : Json(nullptr);
        if (!lr.histogram.empty()) j["histogram"] = lr.histogram;
        if (m_verify) j["witness_verified"] = verified;
        out << j.dump() << "\n";
      } else {
        out << lr.max_line_length << "\n";
        if (m_verify) out << (verified ? "witness verified" : "witness FAILED verification") << "\n";
      }
      return verified ? kExitOk : kExitInternal;
    }

    if (*check) {
      const MatroidPtr m = load_with_minors(ch_file, ch_minor);
      const LineLengthReport lr = max_line_length(*m, ch_ell + 2, opts);
      Json j{{"schema", 1}, {"ell", ch_ell}, {"rank", m->full_rank()}};
      if (lr.max_line_length > ch_ell + 1) {
        j["in_class"] = false;
        j["witness"] = witness_to_json(*lr.witness);
        out << j.dump() << "\n";
        err << "matflat: NotInClass: the matroid has a U_{2," << lr.max_line_length << "}-minor\n";
        return kExitData;
      }
      j["in_class"] = true;
      const ClaimReport kung = check_kung(*m, ch_ell, opts);
      Report rep{kung};
      const int lo = ch_k ? *ch_k : 0;
      const int hi = ch_k ? *ch_k : m->full_rank();
      for (int k = lo; k <= hi; ++k) rep.push_back(check_whitney_bound(*m, ch_ell, k, opts));
      j["claims"] = Json::array();
      for (const auto& c : rep) j["claims"].push_back(to_json(c, false));
      const bool violated = any_failed(rep);
      j["holds"] = !violated;
      if (common.json() || violated)
        out << j.dump() << "\n";
      else
        out << report_to_table(rep);
      return violated ? kExitBoundViolated : kExitOk;
    }

    if (*verify) {
      const Report rep = verify_paper(v_profile == "full" ? Profile::kFull : Profile::kQuick, opts);
      if (common.json())
        out << report_to_json(rep).dump(2) << "\n";
      else
        out << report_to_table(rep);
      if (!v_out.empty()) write_or_print(report_to_json(rep), v_out, out);
      return any_failed(rep) ? kExitClaimFailed : kExitOk;
    }

    if (*rank) {
      const MatroidPtr m = load_with_minors(r_file, r_minor);
      const ElementSet s = parse_set(r_set);
      if (!s.is_subset_of(m->ground())) throw Error(ErrorKind::kInvalidArgument, "--set leaves the ground set");
      const ElementSet cl = m->closure(s);
      if (common.json())
        out << Json{{"set", set_json(s)}, {"rank", m->rank(s)}, {"closure", set_json(cl)}, {"is_flat", cl == s}}.dump()
            << "\n";
      else
        out << "rank " << m->rank(s) << "\nclosure " << set_line(cl) << "\n";
      return kExitOk;
    }

    if (*simp) {
      const MatroidPtr m = load_with_minors(s_file, s_minor);
      const Simplification si = simplify(m);
      if (common.json()) {
        Json classes = Json::array();
        for (const auto& c : si.classes) classes.push_back(set_json(c));
        out << Json{{"points", si.classes.size()}, {"loops", set_json(si.loops)}, {"classes", classes}}.dump() << "\n";
      } else {
        out << si.classes.size() << "\n";
        for (const auto& c : si.classes) out << set_line(c) << "\n";
      }
      return kExitOk;
    }

    if (*represent) {
      const MatroidPtr m = load_with_minors(rp_file, rp_minor);
      const bool ok = is_gfq_representable_rank_le3(*m, rp_q);
      if (common.json())
        out << Json{{"q", rp_q}, {"representable", ok}}.dump() << "\n";
      else
        out << (ok ? "true" : "false") << "\n";
      return kExitOk;
    }

    if (*ident) {
      const MatroidPtr m = load_with_minors(id_file, id_minor);
      const Report r = check_sp_identities(m, id_k, id_e, id_ell, opts);
      if (common.json())
        out << report_to_json(r, false).dump() << "\n";
      else
        out << report_to_table(r);
      return any_failed(r) ? kExitClaimFailed : kExitOk;
    }

    if (*cor) {
      const ClaimReport c = corollary_check(cor_q, opts);
      if (common.json())
        out << to_json(c, false).dump() << "\n";
      else
        out << report_to_table({c});
      return c.passed() ? kExitOk : kExitClaimFailed;
    }

    if (*field) {
      if (fd_all) {
        out << "| q | p | degree | modulus |\n|---|---|---|---|\n";
        for (int q = 2; q <= kMaxFieldOrder; ++q) {
          if (!is_prime_power(q)) continue;
          const auto f = shared_field(q);
          out << "| " << q << " | " << f->characteristic() << " | " << f->degree() << " | "
              << f->modulus_string() << " |\n";
        }
        return kExitOk;
      }
      if (!fd_q) throw Error(ErrorKind::kInvalidArgument, "field needs q or --all");
      const auto f = shared_field(*fd_q);
      if (common.json()) {
        Json j{{"q", f->q()}, {"p", f->characteristic()}, {"degree", f->degree()}, {"modulus", f->modulus()}};
        if (fd_tables) {
          j["add"] = f->add_table();
          j["mul"] = f->mul_table();
          j["inv"] = f->inv_table();
        }
        out << j.dump() << "\n";
      } else {
        out << "GF(" << f->q() << ") p=" << f->characteristic() << " degree=" << f->degree()
            << " modulus=" << f->modulus_string() << "\n";
        if (fd_tables) {
          for (const char* which : {"add", "mul"}) {
            out << which << "\n";
            const auto& t = std::string(which) == "add" ? f->add_table() : f->mul_table();
            for (int a = 0; a < f->q(); ++a) {
              for (int b = 0; b < f->q(); ++b) out << (b ? " " : "") << static_cast<int>(t[a * f->q() + b]);
              out << "\n";
            }
          }
        }
      }
      return kExitOk;
    }

    if (*lpp) {
      out << largest_prime_power_leq(lpp_ell) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "matflat: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace matflat::cli
