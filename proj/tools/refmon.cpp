// refmon: batch front-end for the refmon library.
//
// Exit codes: 0 success / property holds, 1 property fails (a witness is
// printed), 2 input error, 3 internal defect.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "refmon/approx.hpp"
#include "refmon/error.hpp"
#include "refmon/io.hpp"
#include "refmon/limits.hpp"
#include "refmon/regular.hpp"
#include "refmon/triple.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace refmon;

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kInternal = 3 };

struct Options {
  std::string format = "text";
  std::size_t max_size = kDefaultMaxSize;
  std::string output;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::InvalidInput, "cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorKind::InvalidInput, "cannot write " + path);
  }
  out << text << '\n';
}

bool json_out(Options const& o) {
  return o.format == "json";
}

std::string mark(bool b) {
  return b ? "yes" : "NO";
}

// The document goes to -o when given; stdout gets the report.
void emit(Options const& o, std::string const& document, std::string const& text_report) {
  if (!o.output.empty()) {
    write_file(o.output, document);
    if (!json_out(o)) {
      std::cout << text_report << "wrote " << o.output << '\n';
    }
    return;
  }
  std::cout << (json_out(o) ? document + "\n" : text_report);
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotRegular:
    case ErrorKind::EmbRequired:
    case ErrorKind::NotInRep:
    case ErrorKind::NotDistributive:
    case ErrorKind::NotOrderUnit:
    case ErrorKind::NotPure:
    case ErrorKind::NotDirectSum:
    case ErrorKind::DecompositionFailure:
    case ErrorKind::InvalidCertificate:
      return kFalse;
    case ErrorKind::ClaimFailure:
    case ErrorKind::InternalInconsistency:
      return kInternal;
    default:
      return kInput;
  }
}

std::string label(RealizedTriple const& r, AbelianGroup const& g, Elem a) {
  auto [e, x] = r.label(a);
  return "(" + std::to_string(e) + ", " + to_string(g, x) + ")";
}

// verify

int cmd_verify(Options const& o, std::string const& path) {
  auto const in = io::parse_monoid_input(read_file(path));
  auto const r  = rep_report(in.monoid, o.max_size);
  json j{{"size", in.monoid.size()},
         {"conical", r.conical},
         {"regular", r.regular},
         {"strongly_periodic", r.strongly_periodic},
         {"refinement", r.refinement},
         {"refinement_method", r.refinement_method},
         {"emb", r.emb},
         {"pur", r.pur},
         {"in_rep", r.in_rep()},
         {"witnesses", r.witnesses}};
  std::ostringstream t;
  t << "monoid of size " << in.monoid.size() << '\n'
    << "  conical            " << mark(r.conical) << '\n'
    << "  regular            " << mark(r.regular) << '\n'
    << "  strongly periodic  " << mark(r.strongly_periodic) << '\n'
    << "  refinement         " << mark(r.refinement) << " (" << r.refinement_method << ")\n"
    << "  emb                " << mark(r.emb) << '\n'
    << "  pur                " << mark(r.pur) << '\n'
    << "  in R_ep            " << mark(r.in_rep()) << '\n';
  for (auto const& w : r.witnesses) {
    t << "  witness: " << w << '\n';
  }
  emit(o, j.dump(2), t.str());
  return r.in_rep() ? kOk : kFalse;
}

// decompose

int cmd_decompose(Options const& o, std::string const& path) {
  auto const in = io::parse_monoid_input(read_file(path));
  auto const d  = decompose_regular(in.monoid);
  json       groups = json::array();
  std::ostringstream t;
  t << "semilattice of " << d.idempotents().size() << " groups, top " << d.top() << '\n';
  for (Elem e : d.idempotents()) {
    auto const members = d.group(e);
    json       inv     = json::object();
    for (Elem x : members) {
      inv[std::to_string(x)] = d.inverse_of(x);
    }
    groups.push_back(json{{"idempotent", e},
                          {"elements", std::vector<Elem>(members.begin(), members.end())},
                          {"exponent", d.group_exponent(e)},
                          {"inverse", inv}});
    t << "  M_" << e << ": " << members.size() << " elements, exponent "
      << d.group_exponent(e) << '\n';
  }
  json j{{"idempotents", std::vector<Elem>(d.idempotents().begin(), d.idempotents().end())},
         {"top", d.top()},
         {"groups", groups}};
  try {
    auto const s = structure_triple(in.monoid);
    j["triple"]  = json::parse(io::to_json(s.triple));
    j["iso"]     = std::vector<Elem>(s.iso.map().begin(), s.iso.map().end());
    t << "structure triple: G = ⊕ Z/n for n in [";
    auto const f = s.triple.group.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      t << (i ? ", " : "") << f[i];
    }
    t << "]\n";
    for (Elem e = 0; e < s.triple.subgroups.size(); ++e) {
      t << "  G_" << e << " (idempotent " << s.idempotent_of_index[e]
        << "): order " << s.triple.subgroups[e].size() << '\n';
    }
  } catch (Error const& err) {
    if (err.kind() != ErrorKind::EmbRequired) {
      throw;
    }
    j["triple"] = nullptr;
    j["triple_error"] = err.what();
    t << "no structure triple: " << err.what() << '\n';
  }
  emit(o, j.dump(2), t.str());
  return kOk;
}

// realize

int cmd_realize(Options const& o, std::string const& path) {
  auto const t = io::parse_triple(read_file(path));
  auto const r = realize_from_triple(t);
  std::ostringstream txt;
  txt << "realized monoid of size " << r.monoid().size() << '\n';
  for (Elem a = 0; a < r.monoid().size(); ++a) {
    txt << "  " << a << " = " << label(r, t.group, a) << '\n';
  }
  json j      = json::parse(io::to_json(r.monoid()));
  json labels = json::array();
  for (Elem a = 0; a < r.monoid().size(); ++a) {
    auto [e, x] = r.label(a);
    labels.push_back(json{{"e", e}, {"g", t.group.decode(x)}});
  }
  j["labels"] = labels;
  emit(o, j.dump(2), txt.str());
  return kOk;
}

// blocks

int cmd_blocks(Options const& o, std::string const& path, std::optional<Elem> unit,
               std::string const& orders) {
  auto const in = io::parse_monoid_input(read_file(path));
  auto c = in.triple ? blocks_retract(*in.triple, o.max_size)
                     : blocks_retract(in.monoid, o.max_size);
  if (unit) {
    if (*unit >= c.monoid.size()) {
      raise(ErrorKind::InvalidInput, "unit " + std::to_string(*unit) + " is not an element");
    }
    c = order_unit_normalize(c, *unit);
  }
  verify(c);
  std::ostringstream t;
  t << "retract onto blocks [";
  for (std::size_t i = 0; i < c.blocks->orders().size(); ++i) {
    t << (i ? ", " : "") << c.blocks->orders()[i];
  }
  t << "], " << c.target.size() << " elements; mu o eps = id verified\n";
  if (c.unit) {
    t << "order-unit " << *c.unit << " of B\n";
  }
  int code = kOk;
  if (!orders.empty()) {
    auto const g  = io::parse_generalized_integer(orders);
    bool const ok = verify_order_restriction(c, g);
    t << "every block order divides " << g.to_string() << ": " << mark(ok) << '\n';
    if (!ok) {
      code = kFalse;
    }
  }
  emit(o, io::to_json(c), t.str());
  return code;
}

// approx

int cmd_approx(Options const& o, std::string const& path, std::string const& elements) {
  auto const t = io::parse_triple(read_file(path));
  auto const x = io::parse_elements(read_file(elements), t.group);
  auto const c = approximate(t, x, o.max_size);
  std::ostringstream txt;
  txt << "X has " << c.x.size() << " elements, m = " << c.m << '\n'
      << "D has " << c.d.size() << " elements, " << c.pieces.size()
      << " join-irreducibles\n";
  for (auto const& p : c.pieces) {
    txt << "  P = " << p.p << ": |H| = " << p.h.size() << ", |H'| = " << p.h_prime.size()
        << ", u = " << p.u << ", v = " << p.v << ", w = " << p.w << ", psi = " << p.psi
        << '\n';
  }
  txt << "|N| = " << c.n_size << " <= " << c.bound << '\n';
  emit(o, io::to_json(c), txt.str());
  return kOk;
}

// factor

int cmd_factor(Options const& o, std::string const& path) {
  auto const base = fs::path(path).parent_path();
  auto const h    = io::parse_hom(read_file(path), [&](std::string const& p) {
    fs::path q(p);
    return read_file((q.is_absolute() ? q : base / q).string());
  });
  auto const phi = MonoidHom::validate(h.source, h.target, h.map);
  auto const c   = blocks_retract(h.target, o.max_size);
  auto const f   = factor_through(phi, c);
  auto const k   = kernel(phi);
  json j{{"blocks", std::vector<std::uint32_t>(c.blocks->orders().begin(),
                                               c.blocks->orders().end())},
         {"psi", std::vector<Elem>(f.psi.map().begin(), f.psi.map().end())},
         {"phi_prime", std::vector<Elem>(f.phi_prime.map().begin(), f.phi_prime.map().end())},
         {"kernel_classes", k.classes()}};
  std::ostringstream t;
  t << "phi = phi' o psi through B* of size " << c.target.size() << '\n'
    << "ker psi = ker phi: " << k.number_of_classes() << " classes\n";
  emit(o, j.dump(2), t.str());
  return kOk;
}

// check-cert

int cmd_check_cert(Options const& o, std::string const& path) {
  auto const text = read_file(path);
  json       probe;
  try {
    probe = json::parse(text);
  } catch (json::exception const& e) {
    raise(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  std::vector<std::string> failures;
  std::string              kind;
  if (probe.is_object() && probe.value("format", "") == "refmon-approximation-certificate") {
    kind            = "approximation";
    auto const c    = io::parse_approximation(text);
    failures        = verify_certificate(c, o.max_size).failures;
  } else {
    kind = "retract";
    if (auto v = certificate_violation(io::parse_certificate(text))) {
      failures.push_back(*v);
    }
  }
  json j{{"certificate", kind}, {"valid", failures.empty()}, {"failures", failures}};
  std::ostringstream t;
  t << kind << " certificate: " << (failures.empty() ? "valid" : "INVALID") << '\n';
  for (auto const& f : failures) {
    t << "  " << f << '\n';
  }
  std::cout << (json_out(o) ? j.dump(2) + "\n" : t.str());
  return failures.empty() ? kOk : kFalse;
}

std::size_t default_max_size() {
  if (char const* env = std::getenv("REFMON_MAX_SIZE")) {
    try {
      return std::stoul(env);
    } catch (std::exception const&) {
      std::cerr << "refmon: ignoring REFMON_MAX_SIZE=" << env << '\n';
    }
  }
  return kDefaultMaxSize;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refmon: refinement monoids, semilattices of groups, retract certificates"};
  app.require_subcommand(1);
  Options o;
  o.max_size = default_max_size();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-size", o.max_size,
                 "largest monoid searched exhaustively (default $REFMON_MAX_SIZE or 64)");
  app.add_option("-o,--output", o.output, "write the document here");

  std::string input;
  auto* verify_cmd = app.add_subcommand("verify", "run every decider on a monoid or triple");
  verify_cmd->add_option("file", input)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "semilattice-of-groups decomposition");
  decompose_cmd->add_option("file", input)->required();

  auto* realize_cmd = app.add_subcommand("realize", "monoid of a structure triple");
  realize_cmd->add_option("file", input)->required();

  std::optional<Elem> unit;
  std::string         orders;
  auto* blocks_cmd = app.add_subcommand("blocks", "retract certificate onto cyclic blocks");
  blocks_cmd->add_option("file", input)->required();
  blocks_cmd->add_option("--unit", unit, "normalize at this order-unit");
  blocks_cmd->add_option("--orders", orders,
                         "check every block order divides this generalized integer");

  std::string elements;
  auto* approx_cmd = app.add_subcommand("approx", "finite submonoid approximation");
  approx_cmd->add_option("file", input)->required();
  approx_cmd->add_option("--elements", elements, "element list file")->required();

  auto* factor_cmd = app.add_subcommand("factor", "factor a hom B -> M through a block sum");
  factor_cmd->add_option("file", input)->required();

  auto* check_cmd = app.add_subcommand("check-cert", "re-verify a certificate file");
  check_cmd->add_option("file", input)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*verify_cmd) {
      return cmd_verify(o, input);
    }
    if (*decompose_cmd) {
      return cmd_decompose(o, input);
    }
    if (*realize_cmd) {
      return cmd_realize(o, input);
    }
    if (*blocks_cmd) {
      return cmd_blocks(o, input, unit, orders);
    }
    if (*approx_cmd) {
      return cmd_approx(o, input, elements);
    }
    if (*factor_cmd) {
      return cmd_factor(o, input);
    }
    return cmd_check_cert(o, input);
  } catch (Error const& e) {
    int const code = exit_for(e.kind());
    std::cerr << "refmon: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return code;
  } catch (std::exception const& e) {
    std::cerr << "refmon: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
