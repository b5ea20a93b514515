// Command line driver. Loads group and automorphism files, dispatches the
// computation subcommands and renders reports in text or structured form.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tconj/formats.hpp"

namespace {

using nlohmann::json;
using namespace tconj;

// Errors that should terminate with a specific exit code: 2 for bad
// input, 1 for failed checks and exhausted budgets.
struct CliError {
  int code;
  std::string msg;
};

struct Options {
  std::string group, aut, x, y, state, cert_out, matrix, cert;
  long long budget = 100000;
  int degree_cap = 6;
  bool parallel = false;
  std::string format = "text";
};

GroupFile load_group_checked(const std::string& path, const Limits& lim) {
  try {
    return load_group_file(path, lim);
  } catch (const Error& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

AutFile load_aut_checked(const std::string& path) {
  try {
    return load_aut_file(path);
  } catch (const Error& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

Automorphism bind_finite_checked(const GroupFile& g, const AutFile& a,
                                 const std::string& path) {
  try {
    return bind_aut_finite(g, a);
  } catch (const Error& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

AbelianEndo bind_abelian_checked(const GroupFile& g, const AutFile& a,
                                 const std::string& path) {
  try {
    return bind_aut_abelian(g, a);
  } catch (const Error& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

PresAutomorphism bind_pres_checked(const GroupFile& g, const AutFile& a,
                                   const std::string& path,
                                   const Limits& lim) {
  try {
    return bind_aut_pres(g, a, lim);
  } catch (const Error& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

// Finite element references: a bare index, g<index>, or an exact label.
int parse_element(const FiniteGroup& G, const std::string& text,
                  const std::string& flag) {
  auto all_digits = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  long long idx = -1;
  if (all_digits(text, 0))
    idx = std::stoll(text);
  else if (text.size() > 1 && text[0] == 'g' && all_digits(text, 1))
    idx = std::stoll(text.substr(1));
  if (idx >= 0) {
    if (idx >= G.order)
      throw CliError{2, flag + ": element index " + std::to_string(idx) +
                            " out of range (order " +
                            std::to_string(G.order) + ")"};
    return static_cast<int>(idx);
  }
  for (int i = 0; i < G.order; ++i)
    if (G.label(i) == text) return i;
  throw CliError{2, flag + ": no element named \"" + text + "\""};
}

std::vector<Int> parse_coords(const std::string& text,
                              const std::string& flag) {
  std::vector<Int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
      while (!cur.empty() && cur.back() == ' ') cur.pop_back();
      if (cur.empty())
        throw CliError{2, flag + ": empty coordinate in \"" + text + "\""};
      try {
        out.push_back(Int(cur));
      } catch (const std::exception&) {
        throw CliError{2, flag + ": bad integer \"" + cur + "\""};
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Word parse_word_checked(const Presentation& P, const std::string& text,
                        const std::string& flag) {
  try {
    return parse_word(text, P.gen_index);
  } catch (const Error& e) {
    throw CliError{2, flag + ": " + e.what()};
  }
}

std::string coords_string(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

json coords_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& c : v) a.push_back(c.str());
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

void emit(const Options& opt, const std::string& text, const json& j) {
  if (opt.format == "structured")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

// Groups that have a finite materialisation: cayley and perm kinds
// directly, abelian kinds of rank zero through the coordinate encoding.
struct FinitePair {
  FiniteGroup G;
  Automorphism phi;
};

FinitePair finite_pair(const GroupFile& g, const std::string& aut_path,
                       const Limits& lim, const std::string& need) {
  AutFile a = load_aut_checked(aut_path);
  if (g.finite && (g.kind == GroupKind::Cayley || g.kind == GroupKind::Perm))
    return {*g.finite, bind_finite_checked(g, a, aut_path)};
  if (g.abelian) {
    if (g.abelian->rank != 0)
      throw CliError{2, need + " needs a finite group; this abelian group "
                            "has free rank " +
                            std::to_string(g.abelian->rank)};
    AbelianEndo e = bind_abelian_checked(g, a, aut_path);
    FiniteGroup F = abelian_to_finite(*g.abelian, lim);
    Automorphism phi = abelian_automorphism_to_finite(*g.abelian, F, e);
    return {std::move(F), std::move(phi)};
  }
  throw CliError{2, need + " needs a finite group, not a presentation"};
}

int run_info(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  std::string text;
  json j;
  switch (g.kind) {
    case GroupKind::Cayley:
      text += "kind cayley\norder " + std::to_string(g.finite->order) + "\n";
      j["kind"] = "cayley";
      j["order"] = g.finite->order;
      break;
    case GroupKind::Perm:
      text += "kind perm\ndegree " + std::to_string(g.perm->degree) +
              "\norder " + std::to_string(g.finite->order) + "\n";
      j["kind"] = "perm";
      j["degree"] = g.perm->degree;
      j["order"] = g.finite->order;
      break;
    case GroupKind::Abelian: {
      text += "kind abelian\nrank " + std::to_string(g.abelian->rank) + "\n";
      j["kind"] = "abelian";
      j["rank"] = g.abelian->rank;
      j["torsion"] = coords_json(g.abelian->torsion);
      if (!g.abelian->torsion.empty())
        text += "torsion " + coords_string(g.abelian->torsion, " ") + "\n";
      break;
    }
    case GroupKind::Fp:
    case GroupKind::Pc: {
      const Presentation& P = *g.pres;
      text += std::string("kind ") +
              (g.kind == GroupKind::Fp ? "fp" : "pc") + "\ngens";
      for (const std::string& n : P.gen_names) text += " " + n;
      text += "\n";
      j["kind"] = g.kind == GroupKind::Fp ? "fp" : "pc";
      j["gens"] = P.gen_names;
      if (g.kind == GroupKind::Fp) {
        text += "relators " + std::to_string(P.relators.size()) + "\n";
        j["relators"] = P.relators.size();
      } else {
        json orders = json::array();
        text += "orders";
        for (long long r : P.orders) {
          text += " " + (r > 0 ? std::to_string(r) : std::string("inf"));
          orders.push_back(r);
        }
        text += "\n";
        j["orders"] = orders;
      }
      break;
    }
  }
  if (!opt.aut.empty()) {
    AutFile a = load_aut_checked(opt.aut);
    if (g.finite && g.kind != GroupKind::Abelian) {
      Automorphism phi = bind_finite_checked(g, a, opt.aut);
      long long k = automorphism_order(phi);
      text += "aut order " + std::to_string(k) + "\n";
      j["aut_order"] = k;
    } else if (g.abelian) {
      bind_abelian_checked(g, a, opt.aut);
      text += "aut valid\n";
      j["aut_valid"] = true;
    } else {
      bind_pres_checked(g, a, opt.aut, lim);
      text += "aut valid\n";
      j["aut_valid"] = true;
    }
  }
  emit(opt, text, j);
  return 0;
}

int run_twisted_classes(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  FinitePair fp = finite_pair(g, opt.aut, lim, "twisted-classes");
  TwistedClassPartition p = twisted_partition(fp.G, fp.phi);
  std::string text;
  json classes = json::array();
  for (const std::vector<int>& cls : p.classes) {
    std::string members;
    json jm = json::array();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) members += ", ";
      members += fp.G.label(cls[i]);
      jm.push_back(fp.G.label(cls[i]));
    }
    text += "class " + fp.G.label(cls.front()) + ": " + members + "\n";
    classes.push_back({{"rep", fp.G.label(cls.front())}, {"members", jm}});
  }
  text += "R(phi) = " + std::to_string(p.count()) + "\n";
  json j;
  j["classes"] = classes;
  j["reidemeister"] = std::to_string(p.count());
  emit(opt, text, j);
  return 0;
}

int run_reidemeister(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  AutFile a = load_aut_checked(opt.aut);
  ReidemeisterCount r = ReidemeisterCount::infinite();
  if (g.kind == GroupKind::Abelian) {
    AbelianEndo e = bind_abelian_checked(g, a, opt.aut);
    r = reidemeister_number_abelian(*g.abelian, e);
  } else if (g.finite) {
    Automorphism phi = bind_finite_checked(g, a, opt.aut);
    r = reidemeister_number_finite(*g.finite, phi);
  } else {
    throw CliError{2, "reidemeister needs a finite or abelian group"};
  }
  json j;
  j["reidemeister"] = r.str();
  emit(opt, "R(phi) = " + r.str() + "\n", j);
  return 0;
}

int run_separate_abelian(const Options& opt, const GroupFile& g,
                         const Limits& lim) {
  AutFile a = load_aut_checked(opt.aut);
  AbelianEndo e = bind_abelian_checked(g, a, opt.aut);
  if (opt.x.empty() || opt.y.empty())
    throw CliError{2, "abelian separation needs --x and --y coordinate "
                      "vectors"};
  std::vector<Int> x = parse_coords(opt.x, "--x");
  std::vector<Int> y = parse_coords(opt.y, "--y");
  if (static_cast<int>(x.size()) != g.abelian->dim() ||
      static_cast<int>(y.size()) != g.abelian->dim())
    throw CliError{2, "coordinate vectors must have length " +
                          std::to_string(g.abelian->dim())};
  AbelianSeparation s;
  try {
    s = separate_abelian(*g.abelian, e, x, y);
  } catch (const InfiniteReidemeister& ex) {
    throw CliError{2, std::string(ex.what())};
  }
  json j;
  std::string text;
  if (s.conjugate) {
    text = "conjugate\nwitness " + coords_string(s.witness) + "\n";
    j["verdict"] = "conjugate";
    j["witness"] = coords_json(s.witness);
  } else {
    text = "not conjugate\nmoduli " + coords_string(s.moduli, " ") +
           "\nx_image " + coords_string(s.x_image) + "\ny_image " +
           coords_string(s.y_image) + "\n";
    j["verdict"] = "not_conjugate";
    j["moduli"] = coords_json(s.moduli);
    j["reduction"] = matrix_json(s.reduction);
    j["x_image"] = coords_json(s.x_image);
    j["y_image"] = coords_json(s.y_image);
  }
  emit(opt, text, j);
  return 0;
}

DecisionQuery build_query(const Options& opt, const GroupFile& g,
                          const Limits& lim) {
  AutFile a = load_aut_checked(opt.aut);
  if (g.pres) {
    PresAutomorphism phi = bind_pres_checked(g, a, opt.aut, lim);
    Word x = parse_word_checked(*g.pres, opt.x, "--x");
    Word y = parse_word_checked(*g.pres, opt.y, "--y");
    return PresQuery{*g.pres, std::move(phi), std::move(x), std::move(y)};
  }
  if (g.finite && g.kind != GroupKind::Abelian) {
    Automorphism phi = bind_finite_checked(g, a, opt.aut);
    int x = parse_element(*g.finite, opt.x, "--x");
    int y = parse_element(*g.finite, opt.y, "--y");
    return FiniteQuery{*g.finite, std::move(phi), x, y};
  }
  if (g.abelian && g.abelian->rank == 0) {
    AbelianEndo e = bind_abelian_checked(g, a, opt.aut);
    FiniteGroup F = abelian_to_finite(*g.abelian, lim);
    Automorphism phi = abelian_automorphism_to_finite(*g.abelian, F, e);
    int x = parse_element(F, opt.x, "--x");
    int y = parse_element(F, opt.y, "--y");
    return FiniteQuery{std::move(F), std::move(phi), x, y};
  }
  throw CliError{2, "this query form needs a finite or presented group; "
                    "infinite abelian groups go through separate"};
}

int run_decide(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  if (g.kind == GroupKind::Abelian && g.abelian->rank != 0)
    return run_separate_abelian(opt, g, lim);

  DecisionQuery q = build_query(opt, g, lim);
  DecideOptions dopts;
  dopts.a_budget = dopts.b_budget = opt.budget;
  dopts.degree_cap = opt.degree_cap;
  dopts.parallel = opt.parallel;
  dopts.limits = lim;
  if (!opt.state.empty()) {
    std::ifstream in(opt.state);
    if (in) {
      try {
        json st = json::parse(in);
        dopts.resume.a_done = st.at("a_done").get<long long>();
        dopts.resume.b_done = st.at("b_done").get<long long>();
      } catch (const std::exception& e) {
        throw CliError{2, opt.state + ": " + e.what()};
      }
    }
  }

  DecideOutcome out = decide(q, dopts);
  if (!opt.state.empty()) {
    json st;
    st["a_done"] = out.state.a_done;
    st["b_done"] = out.state.b_done;
    std::ofstream os(opt.state);
    os << st.dump() << "\n";
  }

  if (!out.certificate) {
    json j;
    j["verdict"] = "undecided";
    j["a_done"] = out.state.a_done;
    j["b_done"] = out.state.b_done;
    j["a_exhausted"] = out.a_exhausted;
    j["b_exhausted"] = out.b_exhausted;
    emit(opt,
         "undecided\na_done = " + std::to_string(out.state.a_done) +
             "\nb_done = " + std::to_string(out.state.b_done) + "\n",
         j);
    return 1;
  }

  std::string cert_text = serialize_certificate(*out.certificate, q);
  if (!opt.cert_out.empty()) {
    std::ofstream os(opt.cert_out);
    os << cert_text;
  }
  json j;
  std::string text;
  if (const ConjugatorWitness* w =
          std::get_if<ConjugatorWitness>(&*out.certificate)) {
    text = "conjugate\n" + cert_text;
    j["verdict"] = "conjugate";
    j["step"] = w->step;
    if (w->element) {
      j["witness"] = "g" + std::to_string(*w->element);
    } else {
      const PresQuery& pq = std::get<PresQuery>(q);
      j["witness"] = word_to_string(*w->word, pq.P.gen_names);
    }
  } else {
    const SeparatingQuotient& sq =
        std::get<SeparatingQuotient>(*out.certificate);
    text = "not conjugate\n" + cert_text;
    j["verdict"] = "not_conjugate";
    j["step"] = sq.step;
    json images = json::object();
    for (std::size_t i = 0; i < sq.images.size(); ++i) {
      json p = json::array();
      for (int v : sq.images[i]) p.push_back(v);
      images[sq.gen_names[i]] = p;
    }
    j["quotient"] = {{"degree", sq.degree}, {"images", images}};
  }
  emit(opt, text, j);
  return 0;
}

int run_separate(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  if (g.kind == GroupKind::Abelian)
    return run_separate_abelian(opt, g, lim);

  FinitePair fp = finite_pair(g, opt.aut, lim, "separate");
  SeparatedPartition sp = separate_reidemeister_partition(fp.G, fp.phi, lim);
  TwistedClassPartition img =
      twisted_partition(sp.combined.target, sp.combined.phi_K);

  json j;
  std::string text;
  text += "R(phi) = " + std::to_string(sp.partition.count()) + "\n";
  text += "quotient order = " + std::to_string(sp.combined.target.order) +
          "\n";
  j["reidemeister"] = std::to_string(sp.partition.count());
  j["quotient_order"] = sp.combined.target.order;

  if (!opt.x.empty() || !opt.y.empty()) {
    if (opt.x.empty() || opt.y.empty())
      throw CliError{2, "separate needs both --x and --y, or neither"};
    int x = parse_element(fp.G, opt.x, "--x");
    int y = parse_element(fp.G, opt.y, "--y");
    if (sp.partition.class_of[x] == sp.partition.class_of[y]) {
      // witnesses compose: w_y twists the representative to y, so
      // w_y w_x^-1 twists x to y
      int gconj = fp.G.mul(sp.partition.witness[y],
                           fp.G.inv(sp.partition.witness[x]));
      text += "conjugate\nwitness g" + std::to_string(gconj) + "\n";
      j["verdict"] = "conjugate";
      j["witness"] = "g" + std::to_string(gconj);
    } else {
      int cx = img.class_of[sp.combined.map[x]];
      int cy = img.class_of[sp.combined.map[y]];
      text += "not conjugate\nx_image_class = " + std::to_string(cx) +
              "\ny_image_class = " + std::to_string(cy) + "\n";
      j["verdict"] = "not_conjugate";
      j["x_image_class"] = cx;
      j["y_image_class"] = cy;
    }
    emit(opt, text, j);
    return 0;
  }

  json classes = json::array();
  for (std::size_t c = 0; c < sp.partition.count(); ++c) {
    int rep = sp.partition.representative(static_cast<int>(c));
    int ic = img.class_of[sp.combined.map[rep]];
    text += "class " + fp.G.label(rep) + " -> " + std::to_string(ic) + "\n";
    classes.push_back(
        {{"rep", fp.G.label(rep)}, {"image_class", ic}});
  }
  j["classes"] = classes;
  emit(opt, text, j);
  return 0;
}

int run_gamma(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  if (g.pres) {
    AutFile a = load_aut_checked(opt.aut);
    PresAutomorphism phi = bind_pres_checked(g, a, opt.aut, lim);
    Presentation gamma = mapping_torus_presentation(*g.pres, phi, lim);
    std::string text = presentation_to_text(gamma);
    json j;
    j["kind"] = gamma.kind == PresKind::Fp ? "fp" : "pc";
    j["gens"] = gamma.gen_names;
    j["text"] = text;
    emit(opt, text, j);
    return 0;
  }
  FinitePair fp = finite_pair(g, opt.aut, lim, "gamma");
  FiniteTorus t = finite_mapping_torus(fp.G, fp.phi, lim);
  json j;
  j["order"] = t.K.order;
  j["base_order"] = t.base_order;
  j["phi_order"] = t.k;
  emit(opt,
       "order " + std::to_string(t.K.order) + "\nbase order " +
           std::to_string(t.base_order) + "\nphi order " +
           std::to_string(t.k) + "\n",
       j);
  return 0;
}

int run_verify_burnside(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  FinitePair fp = finite_pair(g, opt.aut, lim, "verify-burnside");
  BurnsideCheck b = verify_burnside_finite(fp.G, fp.phi);
  json j;
  j["reidemeister"] = b.reidemeister.str();
  j["fixed_classes"] = b.fixed_classes.str();
  j["ok"] = b.ok;
  emit(opt,
       "R=" + b.reidemeister.str() + " S=" + b.fixed_classes.str() +
           (b.ok ? " OK" : " MISMATCH") + "\n",
       j);
  return b.ok ? 0 : 1;
}

int run_snf(const Options& opt) {
  IntMatrix m(1, 1);
  try {
    m = parse_matrix_text(read_file(opt.matrix));
  } catch (const Error& e) {
    throw CliError{2, opt.matrix + ": " + e.what()};
  }
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> diag = s.diagonal();
  std::string text = "D = diag(" + coords_string(diag, ", ") + ")\n";
  auto rows = [&](const IntMatrix& a) {
    std::string out;
    for (int i = 0; i < a.rows; ++i) {
      for (int j = 0; j < a.cols; ++j)
        out += (j ? " " : "") + a.at(i, j).str();
      out += "\n";
    }
    return out;
  };
  text += "U =\n" + rows(s.U) + "V =\n" + rows(s.V);
  json j;
  j["d"] = coords_json(diag);
  j["u"] = matrix_json(s.U);
  j["v"] = matrix_json(s.V);
  emit(opt, text, j);
  return 0;
}

int run_verify_cert(const Options& opt, const Limits& lim) {
  GroupFile g = load_group_checked(opt.group, lim);
  DecisionQuery q = build_query(opt, g, lim);
  Certificate cert(ConjugatorWitness{});
  try {
    cert = parse_certificate(read_file(opt.cert), q);
  } catch (const Error& e) {
    throw CliError{2, opt.cert + ": " + e.what()};
  }
  VerifyResult r = verify_certificate(q, cert, lim);
  json j;
  j["ok"] = r.ok;
  if (!r.ok) j["reason"] = r.reason;
  emit(opt,
       r.ok ? std::string("certificate ok\n")
            : "certificate rejected: " + r.reason + "\n",
       j);
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugacy toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", opt.group, "group file")->required();
  };
  auto add_aut = [&](CLI::App* c) {
    c->add_option("--aut", opt.aut, "automorphism file")->required();
  };
  auto add_xy = [&](CLI::App* c, bool required) {
    auto* ox = c->add_option("--x", opt.x, "first element");
    auto* oy = c->add_option("--y", opt.y, "second element");
    if (required) {
      ox->required();
      oy->required();
    }
  };

  CLI::App* info = app.add_subcommand("info", "describe a group file");
  add_group(info);
  info->add_option("--aut", opt.aut, "automorphism file");
  add_format(info);

  CLI::App* tc = app.add_subcommand("twisted-classes",
                                    "list twisted conjugacy classes");
  add_group(tc);
  add_aut(tc);
  add_format(tc);

  CLI::App* reid = app.add_subcommand("reidemeister",
                                      "count twisted conjugacy classes");
  add_group(reid);
  add_aut(reid);
  add_format(reid);

  CLI::App* dec = app.add_subcommand(
      "decide", "decide whether two elements are twisted conjugate");
  add_group(dec);
  add_aut(dec);
  add_xy(dec, true);
  dec->add_option("--budget", opt.budget, "steps per procedure this run");
  dec->add_option("--degree-cap", opt.degree_cap,
                  "largest quotient degree to try");
  dec->add_option("--state", opt.state, "resumable state file");
  dec->add_option("--cert-out", opt.cert_out, "write the certificate here");
  dec->add_flag("--parallel", opt.parallel, "run both procedures in threads");
  add_format(dec);

  CLI::App* sep = app.add_subcommand(
      "separate", "separate twisted classes in a finite quotient");
  add_group(sep);
  add_aut(sep);
  add_xy(sep, false);
  add_format(sep);

  CLI::App* gam = app.add_subcommand("gamma", "build the mapping torus");
  add_group(gam);
  add_aut(gam);
  add_format(gam);

  CLI::App* vb = app.add_subcommand(
      "verify-burnside", "compare the class count against fixed ordinary "
                         "classes");
  add_group(vb);
  add_aut(vb);
  add_format(vb);

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix");
  snf->add_option("matrix", opt.matrix, "matrix file")->required();
  add_format(snf);

  CLI::App* vc = app.add_subcommand("verify-cert",
                                    "check a certificate against a query");
  vc->add_option("cert", opt.cert, "certificate file")->required();
  add_group(vc);
  add_aut(vc);
  add_xy(vc, true);
  add_format(vc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Limits lim;
  try {
    if (info->parsed()) return run_info(opt, lim);
    if (tc->parsed()) return run_twisted_classes(opt, lim);
    if (reid->parsed()) return run_reidemeister(opt, lim);
    if (dec->parsed()) return run_decide(opt, lim);
    if (sep->parsed()) return run_separate(opt, lim);
    if (gam->parsed()) return run_gamma(opt, lim);
    if (vb->parsed()) return run_verify_burnside(opt, lim);
    if (snf->parsed()) return run_snf(opt);
    if (vc->parsed()) return run_verify_cert(opt, lim);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.msg << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
