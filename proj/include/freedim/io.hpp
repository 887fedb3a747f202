#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "freedim/algebras.hpp"
#include "freedim/coverlab.hpp"
#include "freedim/rational.hpp"
#include "freedim/setsys.hpp"

namespace freedim {

enum class DocKind { setsystem, pseudotree, chaincuts, coverfamily, instanceparams };

std::string doc_kind_name(DocKind kind);

/// A family of covers on one ground set, optionally annotated with the
/// growth-witness data (d, M, chi, interval flag) used by witness-check.
struct CoverFamilyDoc {
  std::size_t ground_size = 0;
  std::vector<Cover> covers;
  std::optional<std::uint64_t> d;
  std::optional<Rational> m;
  std::optional<std::vector<std::uint64_t>> chi;
  bool interval = false;

  friend bool operator==(const CoverFamilyDoc&, const CoverFamilyDoc&) = default;
};

/// Scalar inputs of the counting inequality; n is optional because the
/// minimal-n search supplies its own.
struct InstanceParams {
  std::uint64_t d = 1;
  std::uint64_t m = 1;
  std::uint64_t m1 = 1;
  std::uint64_t p = 1;
  std::optional<std::uint64_t> n;

  friend bool operator==(const InstanceParams&, const InstanceParams&) = default;
};

/// A parsed input file: the kind tag always matches the payload
/// alternative. Warnings (e.g. duplicate members) are collected rather
/// than failing the parse.
struct Document {
  DocKind kind = DocKind::setsystem;
  std::string source;
  std::variant<SetFamily, Pseudotree, ChainCuts, CoverFamilyDoc, InstanceParams> payload;
  std::vector<std::string> warnings;
};

/// Syntax errors carry 1-based line/column; semantic errors (bad index,
/// missing key) carry 0/0 and name the offending field instead.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses one document of the stated kind. Throws ParseError.
Document parse_document(const std::string& text, DocKind kind, const std::string& source);

/// Canonical JSON rendering; parse(serialize(parse(x))) == parse(x).
std::string serialize_document(const Document& doc);

}  // namespace freedim
