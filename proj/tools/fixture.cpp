#include "fixture.hpp"

#include <fstream>
#include <sstream>

namespace hocx::cli {

namespace {

const json& field(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(at, "missing \"" + key + "\"");
  return j.at(key);
}

std::string str_field(const json& j, const std::string& key, const std::string& at) {
  const json& v = field(j, key, at);
  if (!v.is_string()) throw ParseError(at + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::size_t index(const json& v, const std::string& at) {
  if (!v.is_number_unsigned()) throw ParseError(at, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::size_t index_field(const json& j, const std::string& key, const std::string& at) {
  return index(field(j, key, at), at + "/" + key);
}

Rational rational(const json& v, const std::string& at) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw ParseError(at, "expected a rational \"p/q\"");
}

const json& array_field(const json& j, const std::string& key, const std::string& at) {
  const json& v = field(j, key, at);
  if (!v.is_array()) throw ParseError(at + "/" + key, "expected an array");
  return v;
}

std::string builtin(const json& j, const std::string& at) {
  if (j.is_string()) return j.get<std::string>();
  return str_field(j, "builtin", at);
}

Rational parse_scale(const json& j, const std::string& key, const std::string& at) {
  return j.contains(key) ? rational(j.at(key), at + "/" + key) : Rational(1);
}

Op scaled(const Op& f, const Rational& k) {
  if (f.domain()) return Op(f.name(), f.in(), f.out(), *f.domain(), f.matrix().scaled(k));
  return Op(f.name(), f.in(), f.out(), f.matrix().scaled(k));
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line ..."
    auto colon = msg.find("syntax error");
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     colon == std::string::npos ? msg : msg.substr(colon));
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string kind_of(const json& doc) {
  std::string k = str_field(doc, "kind", "");
  for (const char* known : {"groupoid", "coalgebra", "xhopf", "sayd", "coextension", "hopf_coextension"})
    if (k == known) return k;
  throw ParseError("/kind", "unknown kind \"" + k + "\"");
}

FiniteGroup load_group(const json& j, const std::string& at) {
  if (!j.is_string()) throw ParseError(at, "expected a group name");
  std::string s = j.get<std::string>();
  if (s == "1") return trivial_group();
  if (s == "S3") return symmetric_group3();
  if (s == "V4") return klein_group();
  if (s.rfind("Z/", 0) == 0) {
    try {
      std::size_t n = std::stoul(s.substr(2));
      if (n >= 1) return cyclic_group(n);
    } catch (const std::exception&) {
    }
  }
  throw UnknownBuiltin("unknown group \"" + s + "\" at " + at);
}

FiniteGroupoid load_groupoid(const json& j, const std::string& at) {
  if (j.is_object() && j.contains("morphisms")) {
    std::vector<std::string> objects, morphisms;
    std::vector<std::size_t> src, tgt;
    for (const json& o : array_field(j, "objects", at)) objects.push_back(o.is_string() ? o.get<std::string>() : o.dump());
    const json& ms = array_field(j, "morphisms", at);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::string p = at + "/morphisms/" + std::to_string(i);
      morphisms.push_back(str_field(ms[i], "name", p));
      src.push_back(index_field(ms[i], "src", p));
      tgt.push_back(index_field(ms[i], "tgt", p));
    }
    std::vector<std::array<std::size_t, 3>> comp;
    const json& cs = array_field(j, "compose", at);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string p = at + "/compose/" + std::to_string(i);
      if (!cs[i].is_array() || cs[i].size() != 3) throw ParseError(p, "expected [g, h, gh]");
      comp.push_back({index(cs[i][0], p), index(cs[i][1], p), index(cs[i][2], p)});
    }
    std::string name = j.contains("name") ? str_field(j, "name", at) : "groupoid";
    return groupoid_from_table(name, objects, morphisms, src, tgt, comp);
  }
  std::string b = builtin(j, at);
  if (b == "trivial") return trivial_groupoid();
  if (b == "pair") return pair_groupoid(index_field(j, "k", at));
  if (b == "group") return group_groupoid(load_group(field(j, "group", at), at + "/group"));
  if (b == "product")
    return product_groupoid(load_groupoid(field(j, "a", at), at + "/a"), load_groupoid(field(j, "b", at), at + "/b"));
  if (b == "union")
    return disjoint_union(load_groupoid(field(j, "a", at), at + "/a"), load_groupoid(field(j, "b", at), at + "/b"));
  throw UnknownBuiltin("unknown groupoid builtin \"" + b + "\" at " + at);
}

Theta load_theta(const json& j, const FiniteGroupoid& g, const std::string& at) {
  if (j.is_string() && j.get<std::string>() == "id") return identity_theta(g);
  if (!j.is_array()) throw ParseError(at, "expected \"id\" or one morphism per object");
  Theta t;
  for (std::size_t i = 0; i < j.size(); ++i) t.push_back(index(j[i], at + "/" + std::to_string(i)));
  if (t.size() != g.n_obj()) throw ParseError(at, "expected " + std::to_string(g.n_obj()) + " entries");
  for (std::size_t m : t)
    if (m >= g.n_mor()) throw ParseError(at, "morphism index out of range");
  return t;
}

Coalgebra load_coalgebra(const json& j, const std::string& at) {
  if (j.is_object() && j.contains("delta")) {
    std::size_t d = index_field(j, "dim", at);
    std::vector<DeltaTerm> terms;
    const json& ds = array_field(j, "delta", at);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      std::string p = at + "/delta/" + std::to_string(i);
      if (!ds[i].is_array() || ds[i].size() != 4) throw ParseError(p, "expected [i, j, k, \"coeff\"]");
      DeltaTerm t{index(ds[i][0], p), index(ds[i][1], p), index(ds[i][2], p), rational(ds[i][3], p)};
      if (t.i >= d || t.j >= d || t.k >= d) throw ParseError(p, "basis index out of range");
      terms.push_back(t);
    }
    std::vector<Rational> eps;
    const json& es = array_field(j, "eps", at);
    for (std::size_t i = 0; i < es.size(); ++i) eps.push_back(rational(es[i], at + "/eps/" + std::to_string(i)));
    if (eps.size() != d) throw ParseError(at + "/eps", "expected " + std::to_string(d) + " entries");
    return Coalgebra(d, terms, eps);
  }
  std::string b = builtin(j, at);
  if (b == "grouplike") return Coalgebra::grouplike(index_field(j, "n", at));
  if (b == "path") return Coalgebra::path();
  throw UnknownBuiltin("unknown coalgebra builtin \"" + b + "\" at " + at);
}

HopfAlgebra load_hopf(const json& j, const std::string& at) {
  std::string b = builtin(j, at);
  if (b == "group") return group_algebra(load_group(field(j, "group", at), at + "/group"));
  if (b == "H4") return sweedler_h4();
  if (b == "idempotent") return idempotent_monoid_bialgebra();
  throw UnknownBuiltin("unknown Hopf algebra builtin \"" + b + "\" at " + at);
}

AnyXHopf load_xhopf(const json& j, const std::string& at) {
  std::string b = builtin(j, at);
  AnyXHopf x;
  if (b == "coenveloping_left") x.left = coenveloping_left(load_coalgebra(field(j, "coalgebra", at), at + "/coalgebra"));
  else if (b == "coenveloping_right")
    x.right = coenveloping_right(load_coalgebra(field(j, "coalgebra", at), at + "/coalgebra"));
  else if (b == "hopf_left") x.left = hopf_to_left_xhopf(load_hopf(field(j, "hopf", at), at + "/hopf"));
  else if (b == "hopf_right") x.right = hopf_to_right_xhopf(load_hopf(field(j, "hopf", at), at + "/hopf"));
  else if (b == "groupoid") x.right = groupoid_xhopf(load_groupoid(field(j, "groupoid", at), at + "/groupoid"));
  else if (b == "weak_hopf") x.left = weak_hopf_to_xhopf(weak_from_hopf(load_hopf(field(j, "hopf", at), at + "/hopf")));
  else if (b == "groupoid_algebra")
    x.left = weak_hopf_to_xhopf(groupoid_algebra(load_groupoid(field(j, "groupoid", at), at + "/groupoid")));
  else throw UnknownBuiltin("unknown x-Hopf builtin \"" + b + "\" at " + at);
  x.name = x.left ? x.left->base.name : x.right->base.name;
  return x;
}

AnySayd load_sayd(const json& j, const std::string& at) {
  std::string b = builtin(j, at);
  AnySayd s;
  if (b == "theta") {
    FiniteGroupoid g = load_groupoid(field(j, "groupoid", at), at + "/groupoid");
    Theta th = load_theta(j.contains("theta") ? j.at("theta") : json("id"), g, at + "/theta");
    s.rl = theta_sayd(groupoid_xhopf(g), g, th);
  } else if (b == "induced_base") {
    Coalgebra c = load_coalgebra(field(j, "coalgebra", at), at + "/coalgebra");
    s.lr = induced_sayd_on_base(coenveloping_left(c), coenveloping_group_like(c, Op::identity(c.dim())),
                                coenveloping_character(c))
               .module;
  } else if (b == "hopf_trivial_lr") {
    s.lr = hopf_trivial_sayd_lr(hopf_to_left_xhopf(load_hopf(field(j, "hopf", at), at + "/hopf")));
  } else if (b == "hopf_trivial_rl") {
    s.rl = hopf_trivial_sayd_rl(hopf_to_right_xhopf(load_hopf(field(j, "hopf", at), at + "/hopf")));
  } else if (b == "hopf_adjoint") {
    HopfAlgebra h = load_hopf(field(j, "hopf", at), at + "/hopf");
    s.lr = hopf_adjoint_sayd(h, hopf_to_left_xhopf(h));
  } else {
    throw UnknownBuiltin("unknown SAYD builtin \"" + b + "\" at " + at);
  }
  // a scaled coaction is the stock way to break stability in fixtures
  Rational k = parse_scale(j, "coaction_scale", at);
  if (s.lr) {
    if (k != 1) s.lr->coaction = scaled(s.lr->coaction, k);
    s.name = s.lr->name;
  } else {
    if (k != 1) s.rl->coaction = scaled(s.rl->coaction, k);
    s.name = s.rl->name;
  }
  return s;
}

CoextensionInput load_coextension(const json& j) {
  const json& bj = field(j, "B", "");
  AnyXHopf b = load_xhopf(bj, "/B");
  if (!b.right) throw ParseError("/B", "a right x-Hopf coalgebra is required");
  RightXHopf bx = *b.right;
  if (j.contains("corrupt_nu_inverse") && j.at("corrupt_nu_inverse").get<bool>()) {
    Matrix bad = bx.nu_inv_m;
    bad.add_to(0, 0, Rational(1));
    bx = with_nu_inverse(bx, bad);
  }
  std::string t = j.contains("T") ? str_field(j, "T", "") : "self";
  if (t != "self") throw UnknownBuiltin("only T = \"self\" is supported at /T");
  std::string k = j.contains("K") ? str_field(j, "K", "") : "derive:S_e";
  if (k != "derive:S_e") throw UnknownBuiltin("only K = \"derive:S_e\" is supported at /K");
  CoextensionInput in{self_coextension(bx), {}};
  const Coalgebra& s = in.x.s.quotient.quotient;
  in.m = induced_sayd_on_base(in.x.k.over, coenveloping_group_like(s, Op::identity(s.dim())), coenveloping_character(s))
             .module;
  return in;
}

HopfCoextensionInput load_hopf_coextension(const json& j) {
  HopfAlgebra h = load_hopf(field(j, "H", ""), "/H");
  const json& cj = j.contains("C") ? j.at("C") : json("self");
  if (cj.is_string()) {
    std::string c = cj.get<std::string>();
    if (c == "self") return {h, hopf_module_coalgebra(h.name, h, h.coalg, h.mul)};
    if (c == "trivial") {
      Op triv = Op::from_fn("trivial", {h.dim(), h.dim()}, {h.dim()}, [&](const Idx& i) {
        return Tensor::basis({h.dim()}, {i[0]}).scaled(h.coalg.epsilon(i[1]));
      });
      return {h, hopf_module_coalgebra(h.name + " trivial", h, h.coalg, triv)};
    }
    throw UnknownBuiltin("unknown module coalgebra \"" + c + "\" at /C");
  }
  // explicit: coalgebra plus action entries [c, h, c', "q"] meaning e_c <| e_h contains q e_c'
  Coalgebra c = load_coalgebra(field(cj, "coalgebra", "/C"), "/C/coalgebra");
  const json& as = array_field(cj, "action", "/C");
  Matrix m(c.dim(), c.dim() * h.dim());
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string p = "/C/action/" + std::to_string(i);
    if (!as[i].is_array() || as[i].size() != 4) throw ParseError(p, "expected [c, h, c', \"coeff\"]");
    std::size_t a = index(as[i][0], p), g = index(as[i][1], p), r = index(as[i][2], p);
    if (a >= c.dim() || g >= h.dim() || r >= c.dim()) throw ParseError(p, "basis index out of range");
    m.add_to(r, a * h.dim() + g, rational(as[i][3], p));
  }
  std::string name = cj.contains("name") ? str_field(cj, "name", "/C") : "C";
  return {h, hopf_module_coalgebra(name, h, c, Op("action", {c.dim(), h.dim()}, {c.dim()}, m))};
}

}  // namespace hocx::cli
