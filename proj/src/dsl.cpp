#include "fibalg/dsl.hpp"

#include <algorithm>
#include <sstream>

namespace fibalg::dsl {

std::string severity_name(Diagnostic::Severity s) {
  switch (s) {
    case Diagnostic::Severity::Lexical: return "lexical";
    case Diagnostic::Severity::Syntactic: return "syntactic";
    case Diagnostic::Severity::Reference: return "reference";
    case Diagnostic::Severity::Law: return "law";
  }
  return "?";
}

namespace {

struct Token {
  enum class Kind { Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  Span span;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

std::vector<Token> lex(const std::string& src, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    Span sp{line, col, 0, i};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      sp.length = int(j - i);
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), sp});
      bump(j - i);
      continue;
    }
    auto punct = [&](const std::string& p) {
      if (src.compare(i, p.size(), p) != 0) return false;
      sp.length = int(p.size());
      out.push_back({Token::Kind::Punct, p, sp});
      bump(p.size());
      return true;
    };
    if (punct("|->") || punct("->") || punct("=>") || punct("{") ||
        punct("}") || punct(":") || punct(";") || punct(",") || punct(".") ||
        punct("=") || punct("*"))
      continue;
    sp.length = 1;
    diags.push_back({Diagnostic::Severity::Lexical,
                     std::string("unexpected character '") + c + "'", sp});
    bump(1);
  }
  Token end;
  end.span = {line, col, 0, src.size()};
  out.push_back(end);
  return out;
}

struct Bail {};  // entity-level recovery

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  std::vector<Diagnostic>& diags;
  Workspace ws;

  const Token& peek(std::size_t k = 0) const {
    return toks[std::min(pos + k, toks.size() - 1)];
  }
  bool at_punct(const std::string& p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == p;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  [[noreturn]] void fail(Diagnostic::Severity sev, const std::string& msg,
                         const Span& sp) {
    diags.push_back({sev, msg, sp});
    throw Bail{};
  }
  void note(Diagnostic::Severity sev, const std::string& msg, const Span& sp) {
    diags.push_back({sev, msg, sp});
  }

  Token ident(const std::string& what) {
    if (peek().kind != Token::Kind::Ident)
      fail(Diagnostic::Severity::Syntactic,
           "expected " + what + ", got '" + peek().text + "'", peek().span);
    return toks[pos++];
  }
  void punct(const std::string& p) {
    if (!at_punct(p))
      fail(Diagnostic::Severity::Syntactic,
           "expected '" + p + "', got '" + peek().text + "'", peek().span);
    ++pos;
  }
  void keyword(const std::string& kw) {
    auto t = ident("'" + kw + "'");
    if (t.text != kw)
      fail(Diagnostic::Severity::Syntactic, "expected '" + kw + "'", t.span);
  }

  // a section header is IDENT ':' with one of the given keywords
  bool at_section(std::initializer_list<const char*> kws) const {
    if (peek().kind != Token::Kind::Ident || !at_punct(":", 1)) return false;
    for (auto* k : kws)
      if (peek().text == k) return true;
    return false;
  }

  void skip_entity() {
    int depth = 0;
    while (!at_end()) {
      if (at_punct("{")) {
        ++depth;
        ++pos;
        continue;
      }
      if (at_punct("}")) {
        ++pos;
        if (--depth <= 0) return;
        continue;
      }
      ++pos;
    }
  }

  void declare(const std::string& kind, const Token& name) {
    for (const auto& [k, n] : ws.order)
      if (n == name.text)
        note(Diagnostic::Severity::Reference,
             "duplicate entity name '" + name.text + "'", name.span);
    ws.order.emplace_back(kind, name.text);
  }

  CatPtr need_cat(const Token& t) {
    auto it = ws.cat_ptrs.find(t.text);
    if (it == ws.cat_ptrs.end())
      fail(Diagnostic::Severity::Reference,
           "unknown category '" + t.text + "'", t.span);
    return it->second;
  }
  const FunctorEntity& need_functor(const Token& t) {
    auto it = ws.functors.find(t.text);
    if (it == ws.functors.end())
      fail(Diagnostic::Severity::Reference, "unknown functor '" + t.text + "'",
           t.span);
    return it->second;
  }
  const NatEntity& need_nat(const Token& t) {
    auto it = ws.nats.find(t.text);
    if (it == ws.nats.end())
      fail(Diagnostic::Severity::Reference,
           "unknown transformation '" + t.text + "'", t.span);
    return it->second;
  }
  const MonadEntity& need_monad(const Token& t) {
    auto it = ws.monads.find(t.text);
    if (it == ws.monads.end())
      fail(Diagnostic::Severity::Reference, "unknown monad '" + t.text + "'",
           t.span);
    return it->second;
  }
  const FinMonoid& need_monoid(const Token& t) {
    if (auto it = ws.groups.find(t.text); it != ws.groups.end())
      return it->second;
    auto it = ws.monoids.find(t.text);
    if (it == ws.monoids.end())
      fail(Diagnostic::Severity::Reference,
           "unknown monoid or group '" + t.text + "'", t.span);
    return it->second;
  }

  void report(const LawReport& r, const Span& sp) {
    for (const auto& v : r.violations)
      note(Diagnostic::Severity::Law, v.law + " [" + v.witness + "]", sp);
  }

  // --- entities ------------------------------------------------------------

  void category() {
    auto name = ident("category name");
    declare("category", name);
    punct("{");
    keyword("objects");
    punct(":");
    FinCategory c;
    c.name = name.text;
    std::map<std::string, Span> obj_span;
    for (;;) {
      auto o = ident("object");
      if (c.has_object(o.text))
        note(Diagnostic::Severity::Reference,
             "duplicate object '" + o.text + "'", o.span);
      c.objects.push_back(o.text);
      obj_span[o.text] = o.span;
      if (at_punct(",")) {
        ++pos;
        continue;
      }
      break;
    }
    punct(";");
    std::map<std::string, std::string> explicit_id;
    if (at_section({"identities"})) {
      pos += 2;
      while (!at_punct("}") && !at_section({"morphisms", "compose"})) {
        auto o = ident("object");
        punct("=");
        auto m = ident("identity morphism name");
        punct(";");
        if (!c.has_object(o.text))
          fail(Diagnostic::Severity::Reference, "unknown object '" + o.text + "'",
               o.span);
        explicit_id[o.text] = m.text;
      }
    }
    for (const auto& o : c.objects) {
      auto it = explicit_id.find(o);
      std::string id = it == explicit_id.end() ? "id_" + o : it->second;
      c.morphisms.push_back({id, o, o});
      c.identities[o] = id;
    }
    if (at_section({"morphisms"})) {
      pos += 2;
      while (!at_punct("}") && !at_section({"compose"})) {
        auto m = ident("morphism name");
        punct(":");
        auto s = ident("source object");
        punct("->");
        auto d = ident("target object");
        punct(";");
        if (!c.has_object(s.text))
          fail(Diagnostic::Severity::Reference,
               "unknown object '" + s.text + "'", s.span);
        if (!c.has_object(d.text))
          fail(Diagnostic::Severity::Reference,
               "unknown object '" + d.text + "'", d.span);
        if (c.has_morphism(m.text))
          note(Diagnostic::Severity::Reference,
               "duplicate morphism '" + m.text + "'", m.span);
        c.morphisms.push_back({m.text, s.text, d.text});
      }
    }
    if (at_section({"compose"})) {
      pos += 2;
      while (!at_punct("}")) {
        auto h = ident("composite");
        punct("=");
        auto g = ident("morphism");
        punct(".");
        auto f = ident("morphism");
        punct(";");
        for (const auto& t : {h, g, f})
          if (!c.has_morphism(t.text))
            fail(Diagnostic::Severity::Reference,
                 "unknown morphism '" + t.text + "'", t.span);
        if (c.dst(f.text) != c.src(g.text)) {
          note(Diagnostic::Severity::Law,
               "non-composable pair '" + g.text + " . " + f.text + "'",
               g.span);
          continue;
        }
        c.composition[{g.text, f.text}] = h.text;
      }
    }
    punct("}");
    // identity composites are implicit
    for (const auto& m : c.morphisms) {
      c.composition[{m.id, c.identities.at(m.src)}] = m.id;
      c.composition[{c.identities.at(m.dst), m.id}] = m.id;
    }
    report(c.validate(), name.span);
    ws.categories[name.text] = c;
    ws.cat_ptrs[name.text] = make_cat(c);
  }

  void functor_() {
    auto name = ident("functor name");
    declare("functor", name);
    punct(":");
    auto cdom = ident("category");
    punct("->");
    auto ccod = ident("category");
    punct("{");
    FunctorEntity e;
    e.dom = cdom.text;
    e.cod = ccod.text;
    e.data.name = name.text;
    e.data.dom = need_cat(cdom);
    e.data.cod = need_cat(ccod);
    keyword("objects");
    punct(":");
    while (!at_punct("}") && !at_section({"morphisms"})) {
      auto a = ident("object");
      punct("|->");
      auto b = ident("object");
      punct(";");
      if (!e.data.dom->has_object(a.text))
        fail(Diagnostic::Severity::Reference, "unknown object '" + a.text + "'",
             a.span);
      if (!e.data.cod->has_object(b.text))
        fail(Diagnostic::Severity::Reference, "unknown object '" + b.text + "'",
             b.span);
      e.data.omap[a.text] = b.text;
    }
    if (at_section({"morphisms"})) {
      pos += 2;
      while (!at_punct("}")) {
        auto f = ident("morphism");
        punct("|->");
        auto g = ident("morphism");
        punct(";");
        if (!e.data.dom->has_morphism(f.text))
          fail(Diagnostic::Severity::Reference,
               "unknown morphism '" + f.text + "'", f.span);
        if (!e.data.cod->has_morphism(g.text))
          fail(Diagnostic::Severity::Reference,
               "unknown morphism '" + g.text + "'", g.span);
        e.data.mmap[f.text] = g.text;
      }
    }
    punct("}");
    // identities map implicitly
    for (const auto& [o, img] : e.data.omap) {
      const auto& i = e.data.dom->identity(o);
      if (!e.data.mmap.count(i)) e.data.mmap[i] = e.data.cod->identity(img);
    }
    report(e.data.validate(), name.span);
    ws.functors[name.text] = e;
  }

  void nat() {
    auto name = ident("transformation name");
    declare("nat", name);
    punct(":");
    auto fs = ident("functor");
    punct("=>");
    auto ft = ident("functor");
    punct("{");
    NatEntity e;
    e.source = fs.text;
    e.target = ft.text;
    e.data.name = name.text;
    e.data.source = need_functor(fs).data;
    e.data.target = need_functor(ft).data;
    while (!at_punct("}")) {
      keyword("at");
      auto o = ident("object");
      punct(":");
      auto m = ident("component morphism");
      punct(";");
      if (!e.data.source.dom->has_object(o.text))
        fail(Diagnostic::Severity::Reference, "unknown object '" + o.text + "'",
             o.span);
      if (!e.data.source.cod->has_morphism(m.text))
        fail(Diagnostic::Severity::Reference,
             "unknown morphism '" + m.text + "'", m.span);
      e.data.components[o.text] = m.text;
    }
    punct("}");
    report(e.data.validate(), name.span);
    ws.nats[name.text] = e;
  }

  void monad(bool co) {
    auto name = ident("monad name");
    declare(co ? "comonad" : "monad", name);
    keyword("on");
    auto con = ident("category");
    punct("{");
    MonadEntity e;
    e.co = co;
    e.on = con.text;
    auto carrier = need_cat(con);
    keyword("functor");
    punct(":");
    auto tf = ident("functor");
    punct(";");
    keyword("unit");
    punct(":");
    auto un = ident("transformation");
    punct(";");
    keyword("mult");
    punct(":");
    auto mu = ident("transformation");
    punct(";");
    punct("}");
    e.functor_ = tf.text;
    e.unit = un.text;
    e.mult = mu.text;
    const auto& T = need_functor(tf);
    if (T.dom != con.text || T.cod != con.text)
      fail(Diagnostic::Severity::Reference,
           "'" + tf.text + "' is not an endofunctor on " + con.text, tf.span);
    e.data.name = name.text;
    if (!co) {
      e.data.carrier = carrier;
      e.data.T = T.data;
      e.data.eta = need_nat(un).data;
      e.data.mu = need_nat(mu).data;
    } else {
      // a comonad is a monad on the opposite carrier
      e.data.carrier = opposite(carrier);
      e.data.T = opposite(T.data);
      e.data.eta = opposite(need_nat(un).data);  // counit T => Id
      e.data.mu = opposite(need_nat(mu).data);   // comult T => T.T
    }
    report(check_monad(e.data), name.span);
    ws.monads[name.text] = e;
  }

  void parammonad() {
    auto name = ident("parametrized monad name");
    declare("parammonad", name);
    punct(":");
    auto pa = ident("parameter category");
    punct("*");
    auto ca = ident("carrier category");
    punct("{");
    ParamEntity e;
    e.params = pa.text;
    e.carriers = ca.text;
    e.data.name = name.text;
    e.data.params = need_cat(pa);
    e.data.carriers = need_cat(ca);
    while (!at_punct("}")) {
      auto kw = ident("'at' or 'along'");
      if (kw.text == "at") {
        auto o = ident("parameter object");
        punct(":");
        auto m = ident("monad");
        punct(";");
        if (!e.data.params->has_object(o.text))
          fail(Diagnostic::Severity::Reference,
               "unknown object '" + o.text + "'", o.span);
        const auto& md = need_monad(m);
        if (md.on != ca.text || md.co)
          fail(Diagnostic::Severity::Reference,
               "'" + m.text + "' is not a monad on " + ca.text, m.span);
        e.at[o.text] = m.text;
        e.data.per_object[o.text] = md.data;
      } else if (kw.text == "along") {
        auto f = ident("parameter morphism");
        punct(":");
        auto n = ident("transformation");
        punct(";");
        if (!e.data.params->has_morphism(f.text))
          fail(Diagnostic::Severity::Reference,
               "unknown morphism '" + f.text + "'", f.span);
        e.along[f.text] = n.text;
        e.data.per_morphism[f.text] = need_nat(n).data;
      } else {
        fail(Diagnostic::Severity::Syntactic, "expected 'at' or 'along'",
             kw.span);
      }
    }
    punct("}");
    // identity parameters carry the identity transformation implicitly
    for (const auto& [a, m] : e.data.per_object) {
      const auto& i = e.data.params->identity(a);
      if (!e.data.per_morphism.count(i))
        e.data.per_morphism[i] = identity_nat(m.T);
    }
    report(check_param(e.data), name.span);
    ws.params[name.text] = e;
  }

  void fibration() {
    auto name = ident("fibration name");
    declare("fibration", name);
    keyword("over");
    auto ba = ident("base category");
    punct("{");
    FibrationEntity e;
    e.over = ba.text;
    e.data.name = name.text;
    e.data.base = need_cat(ba);
    while (!at_punct("}")) {
      auto kw = ident("'at' or 'along'");
      if (kw.text == "at") {
        auto o = ident("base object");
        punct(":");
        auto cn = ident("category");
        punct(";");
        if (!e.data.base->has_object(o.text))
          fail(Diagnostic::Severity::Reference,
               "unknown object '" + o.text + "'", o.span);
        e.at[o.text] = cn.text;
        e.data.fibre[o.text] = need_cat(cn);
      } else if (kw.text == "along") {
        auto f = ident("base morphism");
        punct(":");
        auto fn = ident("functor");
        punct(";");
        if (!e.data.base->has_morphism(f.text))
          fail(Diagnostic::Severity::Reference,
               "unknown morphism '" + f.text + "'", f.span);
        e.along[f.text] = fn.text;
        e.data.reindex_[f.text] = need_functor(fn).data;
      } else {
        fail(Diagnostic::Severity::Syntactic, "expected 'at' or 'along'",
             kw.span);
      }
    }
    punct("}");
    for (const auto& [a, fib] : e.data.fibre) {
      const auto& i = e.data.base->identity(a);
      if (!e.data.reindex_.count(i)) e.data.reindex_[i] = identity_functor(fib);
    }
    report(check_split(e.data), name.span);
    ws.fibrations[name.text] = e;
  }

  FinMonoid monoid_body(const Token& name) {
    punct("{");
    FinMonoid m;
    m.name = name.text;
    keyword("elements");
    punct(":");
    for (;;) {
      auto el = ident("element");
      m.elements.push_back(el.text);
      if (at_punct(",")) {
        ++pos;
        continue;
      }
      break;
    }
    punct(";");
    keyword("unit");
    punct(":");
    auto u = ident("unit element");
    punct(";");
    m.unit = u.text;
    keyword("mult");
    punct(":");
    while (!at_punct("}")) {
      auto x = ident("element");
      auto y = ident("element");
      punct("=");
      auto z = ident("element");
      punct(";");
      for (const auto& t : {x, y, z})
        if (!m.has(t.text))
          fail(Diagnostic::Severity::Reference,
               "unknown element '" + t.text + "'", t.span);
      m.mult[{x.text, y.text}] = z.text;
    }
    punct("}");
    return m;
  }

  void monoid() {
    auto name = ident("monoid name");
    declare("monoid", name);
    auto m = monoid_body(name);
    report(m.validate(), name.span);
    ws.monoids[name.text] = m;
  }

  void group() {
    auto name = ident("group name");
    declare("group", name);
    auto m = monoid_body(name);
    auto r = m.validate();
    report(r, name.span);
    FinGroup g;
    static_cast<FinMonoid&>(g) = m;
    if (r.ok()) {
      try {
        g = to_group(m);
      } catch (const Error& e) {
        note(Diagnostic::Severity::Law, e.what(), name.span);
      }
      report(g.validate(), name.span);
    }
    ws.groups[name.text] = g;
  }

  void action() {
    auto name = ident("action name");
    declare("action", name);
    punct(":");
    auto ga = ident("acting monoid");
    keyword("on");
    auto ha = ident("carrier monoid");
    punct("{");
    ActionEntity e;
    e.acting = ga.text;
    e.carrier = ha.text;
    e.data.name = name.text;
    e.data.acting = need_monoid(ga);
    e.data.carrier = need_monoid(ha);
    keyword("psi");
    punct(":");
    while (!at_punct("}")) {
      auto g = ident("acting element");
      auto x = ident("carrier element");
      punct("=");
      auto y = ident("carrier element");
      punct(";");
      if (!e.data.acting.has(g.text))
        fail(Diagnostic::Severity::Reference,
             "unknown element '" + g.text + "'", g.span);
      for (const auto& t : {x, y})
        if (!e.data.carrier.has(t.text))
          fail(Diagnostic::Severity::Reference,
               "unknown element '" + t.text + "'", t.span);
      e.data.psi[{g.text, x.text}] = y.text;
    }
    punct("}");
    report(e.data.validate(), name.span);
    ws.actions[name.text] = e;
  }

  void run() {
    while (!at_end()) {
      try {
        auto kw = ident("entity keyword");
        if (kw.text == "category") category();
        else if (kw.text == "functor") functor_();
        else if (kw.text == "nat") nat();
        else if (kw.text == "monad") monad(false);
        else if (kw.text == "comonad") monad(true);
        else if (kw.text == "parammonad") parammonad();
        else if (kw.text == "fibration") fibration();
        else if (kw.text == "monoid") monoid();
        else if (kw.text == "group") group();
        else if (kw.text == "action") action();
        else
          fail(Diagnostic::Severity::Syntactic,
               "unknown entity keyword '" + kw.text + "'", kw.span);
      } catch (const Bail&) {
        skip_entity();
      }
    }
  }
};

}  // namespace

ParseResult parse(const std::string& text) {
  ParseResult r;
  auto toks = lex(text, r.diagnostics);
  Parser p{toks, 0, r.diagnostics};
  p.run();
  if (r.diagnostics.empty()) r.workspace = std::move(p.ws);
  return r;
}

// --- serializer --------------------------------------------------------------

namespace {

void put_category(std::ostream& out, const FinCategory& c) {
  out << "category " << c.name << " {\n  objects: ";
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    out << (i ? ", " : "") << c.objects[i];
  out << ";\n";
  bool any = false;
  for (const auto& o : c.objects)
    if (c.identities.at(o) != "id_" + o) {
      if (!any) out << "  identities:\n", any = true;
      out << "    " << o << " = " << c.identities.at(o) << ";\n";
    }
  any = false;
  for (const auto& m : c.morphisms) {
    if (c.is_identity(m.id)) continue;
    if (!any) out << "  morphisms:\n", any = true;
    out << "    " << m.id << " : " << m.src << " -> " << m.dst << ";\n";
  }
  any = false;
  for (const auto& [gf, h] : c.composition) {
    if (c.is_identity(gf.first) || c.is_identity(gf.second)) continue;
    if (!any) out << "  compose:\n", any = true;
    out << "    " << h << " = " << gf.first << " . " << gf.second << ";\n";
  }
  out << "}\n";
}

void put_functor(std::ostream& out, const std::string& name,
                 const FunctorEntity& e) {
  out << "functor " << name << " : " << e.dom << " -> " << e.cod
      << " {\n  objects:\n";
  for (const auto& [a, b] : e.data.omap)
    out << "    " << a << " |-> " << b << ";\n";
  bool any = false;
  for (const auto& [f, g] : e.data.mmap) {
    if (e.data.dom->is_identity(f)) continue;
    if (!any) out << "  morphisms:\n", any = true;
    out << "    " << f << " |-> " << g << ";\n";
  }
  out << "}\n";
}

void put_monoid(std::ostream& out, const std::string& kind,
                const FinMonoid& m) {
  out << kind << " " << m.name << " {\n  elements: ";
  for (std::size_t i = 0; i < m.elements.size(); ++i)
    out << (i ? ", " : "") << m.elements[i];
  out << ";\n  unit: " << m.unit << ";\n  mult:\n";
  for (const auto& [xy, z] : m.mult)
    out << "    " << xy.first << " " << xy.second << " = " << z << ";\n";
  out << "}\n";
}

}  // namespace

std::string serialize(const Workspace& w) {
  std::ostringstream out;
  for (const auto& [kind, name] : w.order) {
    if (kind == "category") {
      put_category(out, w.categories.at(name));
    } else if (kind == "functor") {
      put_functor(out, name, w.functors.at(name));
    } else if (kind == "nat") {
      const auto& e = w.nats.at(name);
      out << "nat " << name << " : " << e.source << " => " << e.target
          << " {\n";
      for (const auto& [o, m] : e.data.components)
        out << "  at " << o << ": " << m << ";\n";
      out << "}\n";
    } else if (kind == "monad" || kind == "comonad") {
      const auto& e = w.monads.at(name);
      out << kind << " " << name << " on " << e.on << " {\n  functor: "
          << e.functor_ << ";\n  unit: " << e.unit << ";\n  mult: " << e.mult
          << ";\n}\n";
    } else if (kind == "parammonad") {
      const auto& e = w.params.at(name);
      out << "parammonad " << name << " : " << e.params << " * " << e.carriers
          << " {\n";
      for (const auto& [o, m] : e.at) out << "  at " << o << ": " << m << ";\n";
      for (const auto& [f, n] : e.along)
        out << "  along " << f << ": " << n << ";\n";
      out << "}\n";
    } else if (kind == "fibration") {
      const auto& e = w.fibrations.at(name);
      out << "fibration " << name << " over " << e.over << " {\n";
      for (const auto& [o, c] : e.at) out << "  at " << o << ": " << c << ";\n";
      for (const auto& [f, fn] : e.along)
        out << "  along " << f << ": " << fn << ";\n";
      out << "}\n";
    } else if (kind == "monoid") {
      put_monoid(out, "monoid", w.monoids.at(name));
    } else if (kind == "group") {
      put_monoid(out, "group", w.groups.at(name));
    } else if (kind == "action") {
      const auto& e = w.actions.at(name);
      out << "action " << name << " : " << e.acting << " on " << e.carrier
          << " {\n  psi:\n";
      for (const auto& [gx, y] : e.data.psi)
        out << "    " << gx.first << " " << gx.second << " = " << y << ";\n";
      out << "}\n";
    }
  }
  return out.str();
}

bool same_structure(const FinCategory& a, const FinCategory& b) {
  // identity composites are implicit, so compare compositions with both
  // tables completed on identity pairs
  auto completed = [](const FinCategory& c) {
    auto comp = c.composition;
    for (const auto& m : c.morphisms) {
      comp[{m.id, c.identities.at(m.src)}] = m.id;
      comp[{c.identities.at(m.dst), m.id}] = m.id;
    }
    return comp;
  };
  if (a.name != b.name || a.objects != b.objects ||
      a.identities != b.identities || completed(a) != completed(b))
    return false;
  auto key = [](const FinCategory& c) {
    std::vector<Morphism> m = c.morphisms;
    std::sort(m.begin(), m.end(), [](const Morphism& x, const Morphism& y) {
      return x.id < y.id;
    });
    return m;
  };
  return key(a) == key(b);
}

bool same_workspace(const Workspace& a, const Workspace& b) {
  if (a.order != b.order) return false;
  for (const auto& [kind, name] : a.order) {
    if (kind == "category") {
      if (!same_structure(a.categories.at(name), b.categories.at(name)))
        return false;
    } else if (kind == "functor") {
      const auto& x = a.functors.at(name);
      const auto& y = b.functors.at(name);
      if (x.dom != y.dom || x.cod != y.cod || x.data.omap != y.data.omap ||
          x.data.mmap != y.data.mmap)
        return false;
    } else if (kind == "nat") {
      const auto& x = a.nats.at(name);
      const auto& y = b.nats.at(name);
      if (x.source != y.source || x.target != y.target ||
          x.data.components != y.data.components)
        return false;
    } else if (kind == "monad" || kind == "comonad") {
      const auto& x = a.monads.at(name);
      const auto& y = b.monads.at(name);
      if (x.on != y.on || x.functor_ != y.functor_ || x.unit != y.unit ||
          x.mult != y.mult || x.co != y.co)
        return false;
    } else if (kind == "parammonad") {
      const auto& x = a.params.at(name);
      const auto& y = b.params.at(name);
      if (x.params != y.params || x.carriers != y.carriers || x.at != y.at ||
          x.along != y.along)
        return false;
    } else if (kind == "fibration") {
      const auto& x = a.fibrations.at(name);
      const auto& y = b.fibrations.at(name);
      if (x.over != y.over || x.at != y.at || x.along != y.along) return false;
    } else if (kind == "monoid") {
      if (!a.monoids.at(name).same_table(b.monoids.at(name))) return false;
    } else if (kind == "group") {
      if (!a.groups.at(name).same_table(b.groups.at(name))) return false;
    } else if (kind == "action") {
      const auto& x = a.actions.at(name);
      const auto& y = b.actions.at(name);
      if (x.acting != y.acting || x.carrier != y.carrier ||
          x.data.psi != y.data.psi)
        return false;
    }
  }
  return true;
}

// --- embedding ----------------------------------------------------------------

namespace {

bool known(const Workspace& w, const std::string& name) {
  for (const auto& [k, n] : w.order)
    if (n == name) return true;
  return false;
}

}  // namespace

void add_category(Workspace& w, const FinCategory& c) {
  if (known(w, c.name)) return;
  w.order.emplace_back("category", c.name);
  w.categories[c.name] = c;
  w.cat_ptrs[c.name] = make_cat(c);
}

void add_functor(Workspace& w, const std::string& name, const std::string& dom,
                 const std::string& cod, const FunctorData& f) {
  if (known(w, name)) return;
  w.order.emplace_back("functor", name);
  FunctorEntity e;
  e.dom = dom;
  e.cod = cod;
  e.data = f;
  e.data.name = name;
  w.functors[name] = e;
}

void add_nat(Workspace& w, const std::string& name, const std::string& source,
             const std::string& target, const NatTransData& n) {
  if (known(w, name)) return;
  w.order.emplace_back("nat", name);
  NatEntity e;
  e.source = source;
  e.target = target;
  e.data = n;
  e.data.name = name;
  w.nats[name] = e;
}

void add_monoid(Workspace& w, const FinMonoid& m) {
  if (known(w, m.name)) return;
  w.order.emplace_back("monoid", m.name);
  w.monoids[m.name] = m;
}

void add_group(Workspace& w, const FinGroup& g) {
  if (known(w, g.name)) return;
  w.order.emplace_back("group", g.name);
  w.groups[g.name] = g;
}

void add_action(Workspace& w, const ActionAlgebra& a) {
  add_monoid(w, a.acting);
  add_monoid(w, a.carrier);
  if (known(w, a.name)) return;
  w.order.emplace_back("action", a.name);
  ActionEntity e;
  e.acting = a.acting.name;
  e.carrier = a.carrier.name;
  e.data = a;
  w.actions[a.name] = e;
}

void add_param_monad(Workspace& w, const ParamMonadData& p) {
  if (known(w, p.name)) return;
  add_category(w, *p.params);
  add_category(w, *p.carriers);
  const std::string idf = "Id_" + p.carriers->name;
  add_functor(w, idf, p.carriers->name, p.carriers->name,
              identity_functor(p.carriers));
  ParamEntity e;
  e.params = p.params->name;
  e.carriers = p.carriers->name;
  e.data = p;
  for (const auto& a : p.params->objects) {
    const auto& m = p.per_object.at(a);
    add_functor(w, "T_" + a, e.carriers, e.carriers, m.T);
    add_functor(w, "TT_" + a, e.carriers, e.carriers,
                compose_functors(m.T, m.T));
    add_nat(w, "eta_" + a, idf, "T_" + a, m.eta);
    add_nat(w, "mu_" + a, "TT_" + a, "T_" + a, m.mu);
    const std::string mn = "M_" + a;
    if (!known(w, mn)) {
      w.order.emplace_back("monad", mn);
      MonadEntity me;
      me.on = e.carriers;
      me.functor_ = "T_" + a;
      me.unit = "eta_" + a;
      me.mult = "mu_" + a;
      me.data = m;
      me.data.name = mn;
      w.monads[mn] = me;
    }
    e.at[a] = mn;
  }
  for (const auto& f : p.params->morphisms) {
    if (p.params->is_identity(f.id)) continue;
    add_nat(w, "al_" + f.id, "T_" + f.src, "T_" + f.dst,
            p.per_morphism.at(f.id));
    e.along[f.id] = "al_" + f.id;
  }
  w.order.emplace_back("parammonad", p.name);
  w.params[p.name] = e;
}

void add_fibration(Workspace& w, const SplitFibrationData& s) {
  if (known(w, s.name)) return;
  add_category(w, *s.base);
  FibrationEntity e;
  e.over = s.base->name;
  e.data = s;
  for (const auto& [a, fib] : s.fibre) {
    add_category(w, *fib);
    e.at[a] = fib->name;
  }
  for (const auto& [f, r] : s.reindex_) {
    if (s.base->is_identity(f)) continue;
    const std::string fn = "pb_" + f;
    add_functor(w, fn, s.fibre.at(s.base->dst(f))->name,
                s.fibre.at(s.base->src(f))->name, r);
    e.along[f] = fn;
  }
  w.order.emplace_back("fibration", s.name);
  w.fibrations[s.name] = e;
}

void add_total(Workspace& w, const TotalCategory& t) {
  add_category(w, *t.base);
  add_category(w, *t.cat);
  add_functor(w, t.p.name.empty() ? "proj" : t.p.name, t.cat->name,
              t.base->name, t.p);
}

}  // namespace fibalg::dsl
