#include "valence/structure_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace valence {
namespace logic {
namespace {

bool is_keyword(const std::string& t) {
  return t == "structure" || t == "domain" || t == "constant" || t == "function" ||
         t == "relation" || t == "end";
}

}  // namespace

FiniteStructure read_structure(std::istream& in) {
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  std::size_t i = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (i >= toks.size())
      throw parse_error(errc::syntax_error, std::string("expected ") + what, i);
    return toks[i++];
  };
  if (need("'structure'") != "structure")
    throw parse_error(errc::syntax_error, "file must start with 'structure'", 0);
  if (need("'domain'") != "domain")
    throw parse_error(errc::syntax_error, "expected 'domain'", i);

  std::vector<std::string> names;
  while (i < toks.size() && !is_keyword(toks[i])) names.push_back(toks[i++]);

  // first pass: collect the language
  Language lang;
  struct FnDecl {
    std::string name;
    int arity;
    std::vector<std::string> entries;
  };
  struct RelDecl {
    std::string name;
    int arity;
    std::vector<std::string> entries;
  };
  std::vector<std::pair<std::string, std::string>> consts;
  std::vector<FnDecl> fns;
  std::vector<RelDecl> rels;

  while (i < toks.size()) {
    std::string kw = toks[i++];
    if (kw == "end") break;
    if (kw == "constant") {
      std::string name = need("constant symbol");
      std::string elem = need("element");
      lang.constants.push_back(name);
      consts.emplace_back(name, elem);
    } else if (kw == "function") {
      FnDecl d;
      d.name = need("function symbol");
      d.arity = std::stoi(need("arity"));
      std::size_t count = 1;
      for (int k = 0; k < d.arity; ++k) count *= names.size();
      for (std::size_t k = 0; k < count; ++k) d.entries.push_back(need("table entry"));
      lang.functions.emplace_back(d.name, d.arity);
      fns.push_back(std::move(d));
    } else if (kw == "relation") {
      RelDecl d;
      d.name = need("relation symbol");
      d.arity = std::stoi(need("arity"));
      while (i < toks.size() && !is_keyword(toks[i])) d.entries.push_back(toks[i++]);
      if (d.entries.size() % d.arity != 0)
        throw parse_error(errc::syntax_error, "relation tuple list length mismatch", i);
      lang.relations.emplace_back(d.name, d.arity);
      rels.push_back(std::move(d));
    } else {
      throw parse_error(errc::syntax_error, "unknown keyword '" + kw + "'", i);
    }
  }

  FiniteStructure m(lang, names);
  for (const auto& [name, elem] : consts) m.set_constant(name, m.element_index(elem));
  for (const auto& d : fns) {
    std::vector<int> table;
    table.reserve(d.entries.size());
    for (const auto& e : d.entries) table.push_back(m.element_index(e));
    m.set_function(d.name, std::move(table));
  }
  for (const auto& d : rels) {
    std::set<std::vector<int>> tuples;
    for (std::size_t k = 0; k < d.entries.size(); k += d.arity) {
      std::vector<int> tup;
      for (int j = 0; j < d.arity; ++j) tup.push_back(m.element_index(d.entries[k + j]));
      tuples.insert(std::move(tup));
    }
    m.set_relation(d.name, std::move(tuples));
  }
  m.validate();
  return m;
}

FiniteStructure read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error(errc::invalid_input, "cannot open structure file '" + path + "'");
  return read_structure(in);
}

void write_structure(std::ostream& out, const FiniteStructure& m) {
  out << "structure\ndomain";
  for (const auto& n : m.element_names()) out << " " << n;
  out << "\n";
  for (const auto& c : m.language().constants)
    out << "constant " << c << " " << m.element_names()[m.constant(c)] << "\n";
  for (const auto& [f, arity] : m.language().functions) {
    out << "function " << f << " " << arity << "\n";
    const auto& table = m.function_table(f);
    std::size_t row = m.size();
    for (std::size_t k = 0; k < table.size(); ++k) {
      out << (k % row == 0 ? " " : " ") << m.element_names()[table[k]];
      if ((k + 1) % row == 0) out << "\n";
    }
    if (table.size() % row != 0) out << "\n";
  }
  for (const auto& [r, arity] : m.language().relations) {
    out << "relation " << r << " " << arity << "\n";
    for (const auto& tup : m.relation_tuples(r)) {
      out << " ";
      for (int e : tup) out << " " << m.element_names()[e];
      out << "\n";
    }
  }
  out << "end\n";
}

FiniteStructure structure_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "field") return field_structure(FqField::parse(rest));
    if (kind == "trivialvf") return trivial_valued_field(FqField::parse(rest));
  }
  return read_structure_file(spec);
}

}  // namespace logic
}  // namespace valence
