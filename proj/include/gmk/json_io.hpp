#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/braid.hpp"
#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/meander.hpp"
#include "gmk/meander_builder.hpp"
#include "gmk/realizability.hpp"

// JSON forms of the library types. Every to_json has a from_json that gives
// back an equal value; malformed input throws gmk::error(parse_error).

namespace gmk {

using json = nlohmann::json;

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::parse_error, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("field \"") + key + "\": " + e.what());
  }
}

inline std::vector<std::vector<int>> rows_of(const json& j) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("matrix rows: ") + e.what());
  }
}

}  // namespace detail

// {"n": k, "word": ["a", "b", ...]}
inline void to_json(json& j, const gauss_code& c) { j = json{{"n", c.chords()}, {"word", c.word()}}; }
inline void from_json(const json& j, gauss_code& c) {
  const auto n = detail::field<std::size_t>(j, "n");
  c = gauss_code(detail::field<std::vector<std::string>>(j, "word"));
  if (c.chords() != n) throw error(errc::parse_error, "\"n\" does not match the word");
}

// {"size": k, "rows": [[0, 1, ...], ...]}
inline void to_json(json& j, const bit_matrix& m) { j = json{{"size", m.size()}, {"rows", m.to_rows()}}; }
inline void from_json(const json& j, bit_matrix& m) {
  const auto size = detail::field<std::size_t>(j, "size");
  m = bit_matrix::from_rows(detail::rows_of(j.at("rows")));
  if (m.size() != size) throw error(errc::parse_error, "\"size\" does not match the rows");
}

/// Accepts {"size", "rows"}, a bare array of rows, or any object with a
/// "matrix" field holding either of those (so meander records can be fed back).
inline bit_matrix matrix_from_json(const json& j) {
  if (j.is_array()) return bit_matrix::from_rows(detail::rows_of(j));
  if (j.is_object() && j.contains("rows")) return j.get<bit_matrix>();
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  throw error(errc::parse_error, "expected {\"size\", \"rows\"} or a row array");
}

/// Braid summary of a permutation: {"pi": [...], "inversions": [[i, j], ...], "word": [k, ...]}.
struct braid_record {
  permutation pi;
  inversion_set inversions;
  braid_word word;

  static braid_record of(const permutation& p) { return {p, gmk::inversions(p), nonrepeating_braid_word(p)}; }
  friend bool operator==(const braid_record&, const braid_record&) = default;
};

inline void to_json(json& j, const braid_record& b) {
  json pairs = json::array();
  for (auto [x, y] : b.inversions.pairs) pairs.push_back({x, y});
  j = json{{"pi", b.pi.images()}, {"inversions", pairs}, {"word", b.word.generators}};
}
inline void from_json(const json& j, braid_record& b) {
  b.pi = permutation(detail::field<std::vector<int>>(j, "pi"));
  b.inversions = {b.pi.size(), {}};
  for (const auto& p : detail::field<std::vector<std::pair<int, int>>>(j, "inversions")) b.inversions.pairs.insert(p);
  b.inversions.require_well_formed();
  b.word.generators = detail::field<std::vector<int>>(j, "word");
  if (b.inversions != inversions(b.pi))
    throw error(errc::parse_error, "\"inversions\" is not the inversion set of \"pi\"");
}

// {"matrix": [[...]], "visitation": [...], "upper": [[i, j], ...], "lower": [[i, j], ...]}
inline void to_json(json& j, const meander_record& r) {
  std::vector<int> w(r.visitation.begin(), r.visitation.end());
  const auto rec = reconstruction_from_visitation(w);
  j = json{{"matrix", r.matrix.to_rows()}, {"visitation", w}, {"upper", rec.upper}, {"lower", rec.lower}};
}
inline void from_json(const json& j, meander_record& r) {
  r.matrix = bit_matrix::from_rows(detail::rows_of(detail::field<json>(j, "matrix")));
  const auto w = detail::field<std::vector<std::size_t>>(j, "visitation");
  r.visitation = w;
  const auto rec = reconstruction_from_visitation(std::vector<int>(w.begin(), w.end()));
  if (j.contains("upper") && detail::field<std::vector<arc>>(j, "upper") != rec.upper)
    throw error(errc::parse_error, "\"upper\" does not match the visitation");
  if (j.contains("lower") && detail::field<std::vector<arc>>(j, "lower") != rec.lower)
    throw error(errc::parse_error, "\"lower\" does not match the visitation");
}

// Meander record fields plus {"full_row": r, "code": {...}}; matrix is the re-encoding.
inline void to_json(json& j, const meander_reconstruction& rec) {
  j = json{{"matrix", encode_meander(rec).to_rows()},
           {"visitation", rec.visitation},
           {"upper", rec.upper},
           {"lower", rec.lower},
           {"full_row", rec.full_row},
           {"code", rec.code}};
}
inline void from_json(const json& j, meander_reconstruction& rec) {
  rec = reconstruction_from_visitation(detail::field<std::vector<int>>(j, "visitation"));
  if (j.contains("full_row")) rec.full_row = detail::field<std::size_t>(j, "full_row");
  if (j.contains("upper") && detail::field<std::vector<arc>>(j, "upper") != rec.upper)
    throw error(errc::parse_error, "\"upper\" does not match the visitation");
  if (j.contains("lower") && detail::field<std::vector<arc>>(j, "lower") != rec.lower)
    throw error(errc::parse_error, "\"lower\" does not match the visitation");
  if (j.contains("code") && detail::field<gauss_code>(j, "code") != rec.code)
    throw error(errc::parse_error, "\"code\" does not match the visitation");
}

inline void to_json(json& j, const parity_witness& w) {
  j = json{{"kind", w.type == parity_witness::kind::odd_chord ? "odd_chord" : "odd_pair"},
           {"first", w.first},
           {"count", w.count}};
  if (w.type == parity_witness::kind::odd_pair) j["second"] = w.second;
}
inline void from_json(const json& j, parity_witness& w) {
  const auto kind = detail::field<std::string>(j, "kind");
  if (kind == "odd_chord") {
    w.type = parity_witness::kind::odd_chord;
    w.second.clear();
  } else if (kind == "odd_pair") {
    w.type = parity_witness::kind::odd_pair;
    w.second = detail::field<std::string>(j, "second");
  } else {
    throw error(errc::parse_error, "unknown witness kind \"" + kind + "\"");
  }
  w.first = detail::field<std::string>(j, "first");
  w.count = detail::field<std::size_t>(j, "count");
}

inline void to_json(json& j, const realizability_witness& w) {
  j = json{{"parity", w.parity}, {"text", w.describe()}};
  if (w.smoothed) j["smoothed"] = *w.smoothed;
}
inline void from_json(const json& j, realizability_witness& w) {
  w.parity = detail::field<parity_witness>(j, "parity");
  w.smoothed.reset();
  if (j.contains("smoothed")) w.smoothed = detail::field<std::string>(j, "smoothed");
}

inline void to_json(json& j, const realizability_report& r) {
  j = json{{"method", to_string(r.via)}, {"verdict", to_string(r.result)}};
  if (r.witness) j["witness"] = *r.witness;
  if (r.genus) j["genus"] = *r.genus;
}
inline void from_json(const json& j, realizability_report& r) {
  const auto m = detail::field<std::string>(j, "method");
  if (m == "thm34") {
    r.via = method::theorem34;
  } else if (m == "oracle") {
    r.via = method::oracle;
  } else {
    throw error(errc::parse_error, "unknown method \"" + m + "\"");
  }
  const auto v = detail::field<std::string>(j, "verdict");
  if (v != "realizable" && v != "not-realizable") throw error(errc::parse_error, "unknown verdict \"" + v + "\"");
  r.result = v == "realizable" ? verdict::realizable : verdict::not_realizable;
  r.witness.reset();
  if (j.contains("witness")) r.witness = detail::field<realizability_witness>(j, "witness");
  r.genus.reset();
  if (j.contains("genus")) r.genus = detail::field<std::size_t>(j, "genus");
}

/// Output of `check`: the code and one report per method that ran.
struct check_record {
  gauss_code code;
  std::vector<realizability_report> reports;

  friend bool operator==(const check_record& a, const check_record& b) {
    return a.code == b.code && a.reports == b.reports;
  }
};

inline void to_json(json& j, const check_record& c) { j = json{{"code", c.code}, {"reports", c.reports}}; }
inline void from_json(const json& j, check_record& c) {
  c.code = detail::field<gauss_code>(j, "code");
  c.reports = detail::field<std::vector<realizability_report>>(j, "reports");
}

/// One `audit` line: {"code": "abab", "thm34": bool, "oracle": bool}.
struct audit_record {
  std::string code;
  bool thm34 = false;
  bool oracle = false;

  friend bool operator==(const audit_record&, const audit_record&) = default;
};

inline void to_json(json& j, const audit_record& a) {
  j = json{{"code", a.code}, {"thm34", a.thm34}, {"oracle", a.oracle}};
}
inline void from_json(const json& j, audit_record& a) {
  a.code = detail::field<std::string>(j, "code");
  a.thm34 = detail::field<bool>(j, "thm34");
  a.oracle = detail::field<bool>(j, "oracle");
}

/// Parses text, mapping JSON syntax errors to parse_error.
inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
}

}  // namespace gmk
