#include "holcheck/theory.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

#include "holcheck/error.hpp"

namespace holcheck {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

bool contains_const(const TermPtr& t, const std::string& name) {
  switch (t->kind()) {
    case Term::Kind::Const:
      return t->name() == name;
    case Term::Kind::Var:
    case Term::Kind::SVar:
    case Term::Kind::Bound:
      return false;
    case Term::Kind::App:
      return contains_const(t->fun(), name) || contains_const(t->arg(), name);
    case Term::Kind::Abs:
      return contains_const(t->body(), name);
  }
  return false;
}

TermPtr schematize(const TermPtr& t, const VarContext& vars) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      auto it = vars.find(t->name());
      if (it != vars.end() && equal(it->second, t->ty())) return Term::svar(t->name(), t->ty());
      return t;
    }
    case Term::Kind::SVar:
    case Term::Kind::Const:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App:
      return Term::app(schematize(t->fun(), vars), schematize(t->arg(), vars));
    case Term::Kind::Abs:
      return Term::abs(t->name(), t->ty(), schematize(t->body(), vars));
  }
  return t;
}

}  // namespace

bool Theory::has_theorem(const std::string& name, std::size_t limit) const {
  auto it = theorems_.find(name);
  return it != theorems_.end() && it->second.index <= limit;
}

Sequent Theory::get_theorem(const std::string& name, bool schematic, std::size_t limit) const {
  auto it = theorems_.find(name);
  if (it == theorems_.end() || it->second.index > limit) throw UnknownTheorem(name);
  const TheoremEntry& entry = it->second;
  TermPtr prop = schematic ? schematize(entry.prop, entry.vars) : entry.prop;
  return Sequent({}, std::move(prop));
}

// ------------------------------------------------------------- loading --

class TheoryBuilder {
 public:
  struct Loader {
    std::vector<std::string> search;
    std::map<std::string, Theory> cache;
    std::vector<std::string> stack;  // names currently being loaded

    const Theory& load_import(const std::string& name) {
      auto hit = cache.find(name);
      if (hit != cache.end()) return hit->second;
      for (const auto& loading : stack)
        if (loading == name) {
          std::string chain;
          for (const auto& s : stack) chain += s + " -> ";
          throw ImportCycle(chain + name);
        }
      for (const auto& dir : search) {
        fs::path candidate = fs::path(dir) / (name + ".json");
        if (fs::exists(candidate)) {
          Theory thy = load_path(candidate.string());
          if (thy.name() != name)
            throw SchemaError("/name", "file " + candidate.string() + " declares theory '" +
                                           thy.name() + "', expected '" + name + "'");
          return cache.emplace(name, std::move(thy)).first->second;
        }
      }
      throw ImportNotFound(name);
    }

    Theory load_path(const std::string& path) {
      std::ifstream in(path);
      if (!in) throw ImportNotFound(path);
      ojson doc;
      try {
        doc = ojson::parse(in);
      } catch (const std::exception& e) {
        throw SchemaError("/", std::string("invalid JSON in ") + path + ": " + e.what());
      }
      return build(doc, *this);
    }
  };

  static Theory build(const ojson& doc, Loader& loader);

 private:
  static void merge_import(Theory& thy, const Theory& imported);
  static void add_theorem(Theory& thy, const std::string& name, TermPtr prop, VarContext vars,
                          std::size_t index, const std::string& path);
  static LinearProof parse_proof(const ojson& proof, const std::string& path);
};

namespace {

const ojson& require_key(const ojson& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const ojson& obj, const char* key, const std::string& path) {
  const ojson& v = require_key(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

// Serializes the keys of `obj` not listed in `known`, preserving order.
std::string collect_extra(const ojson& obj, const std::set<std::string>& known) {
  ojson extra = ojson::object();
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) extra[it.key()] = it.value();
  return extra.empty() ? std::string() : extra.dump();
}

VarContext parse_vars(const ojson& vars_json, const SigView& sig, const std::string& path) {
  if (!vars_json.is_object()) throw SchemaError(path, "expected an object of name: type");
  VarContext ctx;
  for (auto it = vars_json.begin(); it != vars_json.end(); ++it) {
    if (!it.value().is_string()) throw SchemaError(path + "/" + it.key(), "expected a type string");
    ctx.emplace(it.key(), parse_type(it.value().get<std::string>(), sig));
  }
  return ctx;
}

}  // namespace

void TheoryBuilder::merge_import(Theory& thy, const Theory& imported) {
  for (const auto& [name, entry] : imported.signature().types())
    thy.sig_.declare_type(name, entry.first, Signature::kImported);
  for (const auto& [name, entry] : imported.signature().constants())
    thy.sig_.declare_constant(name, entry.first, Signature::kImported);
  for (const auto& [name, entry] : imported.theorems()) {
    auto it = thy.theorems_.find(name);
    if (it != thy.theorems_.end()) {
      // Diamond imports deliver the same theorem twice; only identical
      // statements are tolerated.
      if (!equal(it->second.prop, entry.prop))
        throw SchemaError(name, "theorem imported twice with different statements");
      continue;
    }
    Theory::TheoremEntry copy = entry;
    copy.index = Signature::kImported;
    thy.theorems_.emplace(name, std::move(copy));
  }
}

void TheoryBuilder::add_theorem(Theory& thy, const std::string& name, TermPtr prop,
                                VarContext vars, std::size_t index, const std::string& path) {
  Theory::TheoremEntry entry{std::move(prop), std::move(vars), index};
  if (!thy.theorems_.emplace(name, std::move(entry)).second)
    throw SchemaError(path, "theorem name '" + name + "' already exists in the import closure");
}

LinearProof TheoryBuilder::parse_proof(const ojson& proof, const std::string& path) {
  if (!proof.is_array()) throw SchemaError(path, "expected an array of proof items");
  LinearProof out;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const ojson& itj = proof[i];
    const std::string ipath = path + "/" + std::to_string(i);
    if (!itj.is_object()) throw SchemaError(ipath, "expected a proof item object");
    LinearProofItem item;
    try {
      item.id = id_from_string(require_string(itj, "id", ipath));
    } catch (const ParseError& e) {
      throw SchemaError(ipath + "/id", e.what());
    }
    item.rule = require_string(itj, "rule", ipath);
    if (auto it = itj.find("args"); it != itj.end()) {
      if (!it->is_string()) throw SchemaError(ipath + "/args", "expected a string");
      item.args = it->get<std::string>();
    }
    if (auto it = itj.find("prevs"); it != itj.end()) {
      if (!it->is_array()) throw SchemaError(ipath + "/prevs", "expected an array of identifiers");
      for (const auto& pj : *it) {
        if (!pj.is_string()) throw SchemaError(ipath + "/prevs", "expected identifier strings");
        try {
          item.prevs.push_back(id_from_string(pj.get<std::string>()));
        } catch (const ParseError& e) {
          throw SchemaError(ipath + "/prevs", e.what());
        }
      }
    }
    if (auto it = itj.find("th"); it != itj.end()) {
      if (!it->is_string()) throw SchemaError(ipath + "/th", "expected a string");
      item.th = it->get<std::string>();
    }
    out.items.push_back(std::move(item));
  }
  return out;
}

Theory TheoryBuilder::build(const ojson& doc, Loader& loader) {
  if (!doc.is_object()) throw SchemaError("/", "theory must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "name" && it.key() != "imports" && it.key() != "content")
      throw SchemaError("/" + it.key(), "unknown top-level key");

  Theory thy;
  thy.name_ = require_string(doc, "name", "/");

  const ojson& imports = require_key(doc, "imports", "/");
  if (!imports.is_array()) throw SchemaError("/imports", "expected an array of theory names");
  loader.stack.push_back(thy.name_);
  for (const auto& imp : imports) {
    if (!imp.is_string()) throw SchemaError("/imports", "expected theory name strings");
    thy.imports_.push_back(imp.get<std::string>());
    merge_import(thy, loader.load_import(imp.get<std::string>()));
  }
  loader.stack.pop_back();

  const ojson& content = require_key(doc, "content", "/");
  if (!content.is_array()) throw SchemaError("/content", "expected an array of items");

  for (std::size_t i = 0; i < content.size(); ++i) {
    const ojson& itemj = content[i];
    const std::string path = "/content/" + std::to_string(i);
    if (!itemj.is_object()) throw SchemaError(path, "expected an item object");
    std::string ty = require_string(itemj, "ty", path);
    std::size_t index = i + 1;
    SigView view(thy.sig_, index);

    TheoryItem item;
    item.name = require_string(itemj, "name", path);

    if (ty == "type.ax") {
      item.kind = TheoryItem::Kind::TypeDecl;
      const ojson& arity = require_key(itemj, "arity", path);
      if (!arity.is_number_unsigned()) throw SchemaError(path + "/arity", "expected a natural number");
      item.arity = arity.get<std::size_t>();
      item.extra_json = collect_extra(itemj, {"ty", "name", "arity"});
      thy.sig_.declare_type(item.name, item.arity, index);
    } else if (ty == "def.ax") {
      item.kind = TheoryItem::Kind::ConstDecl;
      item.ty = parse_type(require_string(itemj, "type", path), view);
      item.extra_json = collect_extra(itemj, {"ty", "name", "type"});
      thy.sig_.declare_constant(item.name, item.ty, index);
    } else if (ty == "thm.ax") {
      item.kind = TheoryItem::Kind::Axiom;
      item.vars = parse_vars(require_key(itemj, "vars", path), view, path + "/vars");
      item.prop = parse_term(require_string(itemj, "prop", path), item.vars, view);
      if (!equal(type_of(item.prop), bool_type()))
        throw SchemaError(path + "/prop", "prop must be boolean");
      item.extra_json = collect_extra(itemj, {"ty", "name", "vars", "prop"});
      add_theorem(thy, item.name, item.prop, item.vars, index, path);
    } else if (ty == "def") {
      item.kind = TheoryItem::Kind::Definition;
      item.ty = parse_type(require_string(itemj, "type", path), view);
      thy.sig_.declare_constant(item.name, item.ty, index);
      item.prop = parse_term(require_string(itemj, "prop", path), {}, view);
      if (!logic::is_eq(item.prop))
        throw SchemaError(path + "/prop", "definition prop must be an equation");
      const TermPtr& lhs = logic::eq_lhs(item.prop);
      if (!lhs->is_const() || lhs->name() != item.name)
        throw SchemaError(path + "/prop", "equation must define the declared constant");
      if (!equal(lhs->ty(), item.ty))
        throw SchemaError(path + "/prop", "constant used at a type other than its declaration");
      if (contains_const(logic::eq_rhs(item.prop), item.name))
        throw SchemaError(path + "/prop", "definition body mentions the defined constant");
      item.extra_json = collect_extra(itemj, {"ty", "name", "type", "prop"});
      add_theorem(thy, item.name + "_def", item.prop, {}, index, path);
    } else if (ty == "thm") {
      item.kind = TheoryItem::Kind::Theorem;
      item.vars = parse_vars(require_key(itemj, "vars", path), view, path + "/vars");
      item.prop = parse_term(require_string(itemj, "prop", path), item.vars, view);
      if (!equal(type_of(item.prop), bool_type()))
        throw SchemaError(path + "/prop", "prop must be boolean");
      item.proof = parse_proof(require_key(itemj, "proof", path), path + "/proof");
      if (auto it = itemj.find("attributes"); it != itemj.end()) {
        if (!it->is_array()) throw SchemaError(path + "/attributes", "expected an array of strings");
        item.has_attributes = true;
        for (const auto& a : *it) {
          if (!a.is_string()) throw SchemaError(path + "/attributes", "expected strings");
          item.attributes.push_back(a.get<std::string>());
        }
      }
      if (auto it = itemj.find("num_gaps"); it != itemj.end()) {
        if (!it->is_number_integer()) throw SchemaError(path + "/num_gaps", "expected an integer");
        item.num_gaps = it->get<std::int64_t>();
      }
      item.extra_json = collect_extra(
          itemj, {"ty", "name", "vars", "prop", "proof", "attributes", "num_gaps"});
      add_theorem(thy, item.name, item.prop, item.vars, index, path);
    } else if (ty == "datatype" || ty == "type.ind" || ty == "inductive") {
      throw UnsupportedItem(path, ty);
    } else {
      throw SchemaError(path, "unknown item ty '" + ty + "'");
    }
    thy.items_.push_back(std::move(item));
  }
  return thy;
}

Theory load_theory(const std::string& path, const std::vector<std::string>& search_paths) {
  TheoryBuilder::Loader loader;
  loader.search = search_paths;
  return loader.load_path(path);
}

// -------------------------------------------------------------- saving --

namespace {

ojson proof_to_json(const LinearProof& proof) {
  ojson out = ojson::array();
  for (const auto& item : proof.items) {
    ojson j;
    j["id"] = id_to_string(item.id);
    j["rule"] = item.rule;
    j["args"] = item.args;
    ojson prevs = ojson::array();
    for (const auto& p : item.prevs) prevs.push_back(id_to_string(p));
    j["prevs"] = std::move(prevs);
    if (item.th) j["th"] = *item.th;
    out.push_back(std::move(j));
  }
  return out;
}

ojson vars_to_json(const VarContext& vars) {
  ojson out = ojson::object();
  for (const auto& [name, ty] : vars) out[name] = print_type(ty);
  return out;
}

void append_extra(ojson& j, const std::string& extra_json) {
  if (extra_json.empty()) return;
  ojson extra = ojson::parse(extra_json);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
}

ojson item_to_json(const TheoryItem& item) {
  ojson j;
  switch (item.kind) {
    case TheoryItem::Kind::TypeDecl:
      j["ty"] = "type.ax";
      j["name"] = item.name;
      j["arity"] = item.arity;
      break;
    case TheoryItem::Kind::ConstDecl:
      j["ty"] = "def.ax";
      j["name"] = item.name;
      j["type"] = print_type(item.ty);
      break;
    case TheoryItem::Kind::Axiom:
      j["ty"] = "thm.ax";
      j["name"] = item.name;
      j["vars"] = vars_to_json(item.vars);
      j["prop"] = print_term(item.prop);
      break;
    case TheoryItem::Kind::Definition:
      j["ty"] = "def";
      j["name"] = item.name;
      j["type"] = print_type(item.ty);
      j["prop"] = print_term(item.prop);
      break;
    case TheoryItem::Kind::Theorem:
      j["ty"] = "thm";
      j["name"] = item.name;
      j["vars"] = vars_to_json(item.vars);
      j["prop"] = print_term(item.prop);
      j["proof"] = proof_to_json(item.proof);
      if (item.has_attributes) j["attributes"] = item.attributes;
      if (item.num_gaps) j["num_gaps"] = *item.num_gaps;
      break;
  }
  append_extra(j, item.extra_json);
  return j;
}

}  // namespace

std::string theory_to_json(const Theory& thy) {
  ojson doc;
  doc["name"] = thy.name();
  doc["imports"] = thy.imports();
  ojson content = ojson::array();
  for (const auto& item : thy.items()) content.push_back(item_to_json(item));
  doc["content"] = std::move(content);
  return doc.dump(2) + "\n";
}

void save_theory(const Theory& thy, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw HolError("cannot open " + path + " for writing");
  out << theory_to_json(thy);
  if (!out) throw HolError("write failed: " + path);
}

// ------------------------------------------------------------ checking --

bool TheoryCheckReport::all_ok() const {
  for (const auto& t : theorems)
    if (!t.ok) return false;
  return true;
}

bool TheoryCheckReport::ok(bool no_gaps) const {
  return all_ok() && (!no_gaps || theorems_with_gaps.empty());
}

Theory expand_theorem(const Theory& thy, const std::string& theorem_name) {
  Theory out = thy;
  for (std::size_t i = 0; i < out.items_.size(); ++i) {
    TheoryItem& item = out.items_[i];
    if (item.kind != TheoryItem::Kind::Theorem || item.name != theorem_name) continue;
    TheoryView view(thy, i);
    ProofNodePtr root = proof_to_dag(item.proof, view, item.vars);
    item.proof = linearize(expand_fully(root, view));
    return out;
  }
  throw UnknownTheorem(theorem_name);
}

TheoryCheckReport check_theory(const Theory& thy, const CheckOptions& options) {
  TheoryCheckReport report;
  for (std::size_t i = 0; i < thy.items().size(); ++i) {
    const TheoryItem& item = thy.items()[i];
    if (item.kind != TheoryItem::Kind::Theorem) continue;
    TheoremOutcome outcome;
    outcome.name = item.name;
    TheoryView view(thy, i);
    try {
      outcome.report = check_linear_proof(item.proof, view, options.trust, item.vars);
      Sequent expected({}, item.prop);
      Sequent expected_schematic({}, schematize(item.prop, item.vars));
      if (!equal(outcome.report.conclusion, expected) &&
          !equal(outcome.report.conclusion, expected_schematic))
        throw CheckFailure(id_to_string(item.proof.items.back().id),
                           "proof concludes " + print_sequent(outcome.report.conclusion) +
                               " instead of the stated prop");
      outcome.ok = true;
    } catch (const HolError& e) {
      outcome.ok = false;
      outcome.error = e.what();
    }
    report.total_steps += outcome.report.steps_checked;
    report.total_trusted += outcome.report.macro_steps_trusted;
    report.total_expanded += outcome.report.macro_steps_expanded;
    if (!outcome.report.gaps.empty()) report.theorems_with_gaps.push_back(item.name);
    bool failed = !outcome.ok;
    report.theorems.push_back(std::move(outcome));
    if (failed && options.fail_fast) break;
  }
  return report;
}

}  // namespace holcheck
