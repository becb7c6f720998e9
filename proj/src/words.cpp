#include "adlv/words.hpp"

#include <sstream>

namespace adlv {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Coweight parse_translation_token(const RootSystem& R, const std::string& tok) {
  if (tok.size() < 4 || tok.substr(0, 2) != "t[" || tok.back() != ']')
    throw InvalidInput("malformed translation token: " + tok);
  return parse_coweight(R, tok.substr(2, tok.size() - 3));
}

} // namespace

Coweight parse_coweight(const RootSystem& R, const std::string& text) {
  std::vector<Int> coords;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      coords.push_back(std::stoll(cur));
      cur.clear();
    } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
      cur.push_back(ch);
    } else if (ch != ' ') {
      throw InvalidInput(std::string("unexpected character in coordinates: ") + ch);
    }
  }
  if (!cur.empty()) coords.push_back(std::stoll(cur));
  if (static_cast<int>(coords.size()) != R.rank())
    throw InvalidInput("expected " + std::to_string(R.rank()) + " coordinates");
  return Coweight(coords);
}

AffineElt parse_affine(const RootSystem& R, const std::string& text) {
  AffineElt acc = aff_identity(R);
  for (const std::string& tok : tokenize(text)) {
    if (tok == "e") continue;
    if (tok[0] == 's') {
      int k = -1;
      try {
        k = std::stoi(tok.substr(1));
      } catch (...) {
        throw InvalidInput("malformed generator token: " + tok);
      }
      if (k < 0 || k > R.rank()) throw InvalidInput("generator out of range: " + tok);
      acc = aff_mul_gen_right(R, acc, k);
    } else if (tok[0] == 't') {
      acc = aff_mul(R, acc, from_translation(R, parse_translation_token(R, tok)));
    } else {
      throw InvalidInput("unrecognized token: " + tok);
    }
  }
  return acc;
}

WeylElt parse_finite(const RootSystem& R, const std::string& text) {
  WeylElt acc = identity(R);
  for (const std::string& tok : tokenize(text)) {
    if (tok == "e") continue;
    if (tok[0] != 's') throw InvalidInput("finite words admit only s<k> tokens, got: " + tok);
    int k = -1;
    try {
      k = std::stoi(tok.substr(1));
    } catch (...) {
      throw InvalidInput("malformed generator token: " + tok);
    }
    if (k < 1 || k > R.rank()) throw InvalidInput("finite generator out of range: " + tok);
    acc = mul_simple_right(R, acc, k - 1);
  }
  return acc;
}

std::string print_finite(const RootSystem& R, const WeylElt& w) {
  std::vector<int> word = reduced_word(R, w);
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out.push_back(' ');
    out += "s" + std::to_string(word[k] + 1);
  }
  return out;
}

std::string print_coweight(const Coweight& c) {
  std::string out;
  for (int i = 0; i < c.rank(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(c.c[i]);
  }
  return out;
}

std::string print_affine(const RootSystem& R, const AffineElt& a) {
  bool finite_id = is_identity(a.fin);
  bool trans_zero = a.trans.is_zero();
  if (finite_id && trans_zero) return "e";
  std::string out;
  if (!finite_id) out = print_finite(R, a.fin);
  if (!trans_zero) {
    if (!out.empty()) out.push_back(' ');
    out += "t[" + print_coweight(a.trans) + "]";
  }
  return out;
}

std::string print_nodeset(const NodeSet& J, int rank) {
  std::string out = "{";
  bool first = true;
  for (int i : J.nodes(rank)) {
    if (!first) out.push_back(',');
    out += std::to_string(i + 1);
    first = false;
  }
  out.push_back('}');
  return out;
}

} // namespace adlv
