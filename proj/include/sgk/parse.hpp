#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgk/sgmod.hpp"

namespace sgk {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Parses `+ - * ^`, integers, `a/b` scalars, generator names and
/// parentheses into an unreduced word polynomial. Columns are 1-based and
/// offset by `column` so errors point into the enclosing line.
WordPolynomial parse_word_polynomial(std::string_view text, const GeneratorTable& gens, const Field& f,
                                     const std::string& source = "<expr>", int line = 1, int column = 1);

/// Expression in normal form.
Element parse_element(std::string_view text, const Presentation& p, const std::string& source = "<expr>",
                      int line = 1, int column = 1);

/// Comma-separated list of elements ("x^2,y^3"); commas inside parentheses
/// do not split.
std::vector<Element> parse_element_list(std::string_view text, const Presentation& p,
                                        const std::string& source = "<expr>");

struct IdealDecl {
  std::string name;
  std::string ring;
  Side side = Side::TwoSided;
  std::vector<Element> generators;
};

struct OreDecl {
  std::string name;
  Element s;
};

/// Contents of a `.sgr` file: one presentation with its ideals and Ore sets.
struct RingFile {
  std::shared_ptr<const Presentation> presentation;
  std::vector<IdealDecl> ideals;
  std::vector<OreDecl> ores;

  const IdealDecl& ideal(const std::string& name) const;
  const OreDecl& ore(const std::string& name) const;
};

/// Throws ParseError for syntax errors, unknown generators, rules that are
/// not descending pairs, and missing or repeated rules.
RingFile parse_ring_file(std::string_view text, const std::string& source = "<ring>");
RingFile load_ring_file(const std::string& path);

/// Contents of a `.sgm` file. Either a presentation (`rel` lines) or an
/// explicit module (`act <g> * <basis> = <combination>` lines), in which
/// case the declared generators are the basis.
struct ModuleDecl {
  std::string name;
  std::string ring;
  std::string over_ideal;  // non-empty for `over <Ring>/<Ideal>`
  std::vector<ModuleGenerator> generators;
  std::vector<FreeElement> relations;
  bool explicit_actions = false;
  std::vector<std::vector<Vector>> images;  // [ring generator][basis] -> basis coordinates
};

ModuleDecl parse_module_file(std::string_view text, const Presentation& ring, const std::string& source = "<module>");
ModuleDecl load_module_file(const std::string& path, const Presentation& ring);

/// Builds the module on the ring's window. A module declared over R/J gets
/// the relations J*e added and J recorded as annihilator.
ModulePtr build_module(const RingPtr& r, const ModuleDecl& decl, IdealPtr annihilator = nullptr);

std::string read_file(const std::string& path);

}  // namespace sgk
