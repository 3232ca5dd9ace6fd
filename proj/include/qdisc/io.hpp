// Text and JSON front end: expression parsing for Fun(U)_q and U_q sl2
// elements, canonical printers, and the JSON exchange formats.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qdisc/laplace.hpp"

namespace qdisc {

struct UnknownToken : std::runtime_error {
  size_t offset;
  UnknownToken(const std::string& tok, size_t off)
      : std::runtime_error("unknown token '" + tok + "' (at offset " + std::to_string(off) + ")"),
        offset(off) {}
};

struct MixedKind : std::runtime_error {
  MixedKind(const std::string& tok, const std::string& kind)
      : std::runtime_error("token '" + tok + "' does not belong to a " + kind + " expression") {}
};

// Grammar (both kinds): expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := '-' factor | atom ['^' exp].
// Fun atoms: z, z', f0, y, q, integers, parens. Uq atoms: K, Kinv, E, F,
// Omega, q, integers, parens. Half powers q^(n/2) only on the bare q;
// division only by scalars; juxtaposition is not accepted.
FunElement parse_fun(std::string_view src);
UqElement parse_uq(std::string_view src);

std::string fun_str(const FunElement& f);
std::string uq_str(const UqElement& x);

nlohmann::json fun_to_json(const FunElement& f);
FunElement fun_from_json(const nlohmann::json& j);

nlohmann::json uq_to_json(const UqElement& x);
UqElement uq_from_json(const nlohmann::json& j);

nlohmann::json radial_to_json(const RadialX& f);
nlohmann::json radial_to_json(const RadialD& f);
RadialX radial_exact_from_json(const nlohmann::json& j);
// Accepts numbers directly; scalar strings are evaluated at ctx.q.
RadialD radial_numeric_from_json(const nlohmann::json& j, const NumericContext& ctx);

// Sparse triplets with exact scalar strings; adds a "value" column at q
// when ctx is given.
nlohmann::json matrix_to_json(const MatrixModel& m, const NumericContext* ctx = nullptr);

nlohmann::json spectrum_to_json(const SpectrumResult& r, double q, int n);

}  // namespace qdisc
