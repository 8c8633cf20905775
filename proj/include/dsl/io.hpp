#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "dsl/series.hpp"
#include "dsl/solver.hpp"

namespace dsl {

using Json = nlohmann::ordered_json;

inline std::string render_letter(const GroupSpec& G, XLetter l) {
  if (is_x0(l)) return "x0";
  return "x(" + G.residue_string(letter_group(l)) + ")";
}

inline std::string render_letter(const GroupSpec& G, YLetter l) {
  return "y(" + std::to_string(y_weight(l)) + "," + G.residue_string(y_group(l)) + ")";
}

inline std::string render_word(const GroupSpec& G, const XWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += render_letter(G, w[i]);
  }
  return s;
}

inline std::string render_word(const GroupSpec& G, const YWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (YLetter l : w) s += render_letter(G, l);
  return s;
}

template <class W>
std::string render_key(const GroupSpec& G, const std::pair<W, W>& k) {
  return render_word(G, k.first) + " (x) " + render_word(G, k.second);
}

template <class W>
std::string to_text(const GroupSpec& G, const Poly<W>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : p) {
    if (!s.empty()) s += ", ";
    s += render_word(G, w) + ": " + to_string(c);
  }
  return s;
}

template <class W>
std::string to_text(const GroupSpec& G, const Tensor2<W>& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : t) {
    if (!s.empty()) s += ", ";
    s += render_key(G, k) + ": " + to_string(c);
  }
  return s;
}

template <class W>
Json to_json(const GroupSpec& G, const Poly<W>& p) {
  Json j = Json::object();
  for (const auto& [w, c] : p) j[render_word(G, w)] = to_string(c);
  return j;
}

template <class W>
Json to_json(const GroupSpec& G, const Tensor2<W>& t) {
  Json j = Json::object();
  for (const auto& [k, c] : t) j[render_key(G, k)] = to_string(c);
  return j;
}

template <class W>
Json to_json(const GroupSpec& G, const TruncatedSeries<W>& s) {
  Json j;
  j["trunc"] = s.trunc();
  j["terms"] = to_json(G, s.poly());
  return j;
}

inline Json to_json(const DegreeReport& r) {
  Json j;
  j["gamma"] = r.gamma.name();
  j["degree"] = r.degree;
  j["dim_lib"] = r.dim_lib;
  j["dim_dmr"] = r.dim_dmr;
  j["dim_dmr0"] = r.dim_dmr0;
  j["dim_stab_upper"] = r.dim_stab_upper;
  j["source_bound_used"] = r.source_bound_used;
  j["certified"] = r.certified;
  return j;
}

inline std::string csv_header() {
  return "gamma,degree,dim_lib,dim_dmr,dim_dmr0,dim_stab_upper,source_bound_used,certified";
}

inline std::string to_csv(const DegreeReport& r) {
  std::ostringstream os;
  os << r.gamma.name() << ',' << r.degree << ',' << r.dim_lib << ',' << r.dim_dmr << ',' << r.dim_dmr0 << ','
     << r.dim_stab_upper << ',' << r.source_bound_used << ',' << (r.certified ? "true" : "false");
  return os.str();
}

inline std::string to_text(const DegreeReport& r) {
  std::ostringstream os;
  os << "gamma=" << r.gamma.name() << " degree=" << r.degree << " dim_lib=" << r.dim_lib << " dim_dmr=" << r.dim_dmr
     << " dim_dmr0=" << r.dim_dmr0 << " dim_stab_upper=" << r.dim_stab_upper
     << " source_bound_used=" << r.source_bound_used << " certified=" << (r.certified ? "true" : "false");
  return os.str();
}

inline std::vector<std::string> lie_labels(const GroupSpec& G, const LieBasis& b) {
  std::vector<std::string> out;
  for (const auto& w : b.words) out.push_back("L[" + render_word(G, w) + "]");
  return out;
}

// Parses group letter residues "r1,r2,..." into a group index.
inline int parse_residues(const GroupSpec& G, std::string_view text) {
  GroupElement e;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty residue");
    for (char c : cur)
      if (c < '0' || c > '9') throw ParseError("invalid residue '" + cur + "'");
    if (cur.size() > 6) throw ParseError("residue too large");
    e.residues.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  try {
    return G.index(e);
  } catch (const PreconditionError& ex) {
    throw ParseError(ex.what());
  }
}

// Accepts "x0", "x1" (the identity letter) and "x(r1,...)".
inline XLetter parse_x_letter(const GroupSpec& G, std::string_view tok) {
  if (tok == "x0") return kX0;
  if (tok == "x1") return x_letter(G.identity());
  if (tok.size() > 3 && tok.substr(0, 2) == "x(" && tok.back() == ')') {
    return x_letter(parse_residues(G, tok.substr(2, tok.size() - 3)));
  }
  throw ParseError("invalid X letter '" + std::string(tok) + "'");
}

// Accepts "y(n,r1,...)".
inline YLetter parse_y_letter(const GroupSpec& G, std::string_view tok) {
  if (tok.size() > 5 && tok.substr(0, 2) == "y(" && tok.back() == ')') {
    std::string_view inner = tok.substr(2, tok.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("invalid Y letter '" + std::string(tok) + "'");
    std::string ns(inner.substr(0, comma));
    if (ns.empty() || ns.size() > 4 || ns.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid Y letter weight in '" + std::string(tok) + "'");
    }
    const int n = std::stoi(ns);
    if (n < 1) throw ParseError("Y letter weight must be positive");
    return y_letter(n, parse_residues(G, inner.substr(comma + 1)));
  }
  throw ParseError("invalid Y letter '" + std::string(tok) + "'");
}

}  // namespace dsl
