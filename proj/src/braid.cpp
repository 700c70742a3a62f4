#include "qpsurf/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpsurf {

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
  BraidWord w{strands, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) {
      throw std::invalid_argument("bad braid letter: " + token);
    }
    int index = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') throw std::invalid_argument("bad braid letter: " + token);
      index = index * 10 + (token[i] - '0');
    }
    if (index < 1 || index >= strands) throw std::invalid_argument("generator out of range: " + token);
    w.letters.push_back(token[0] == 's' ? index : -index);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters) {
    if (!out.empty()) out += ' ';
    out += (l > 0 ? "s" : "S") + std::to_string(std::abs(l));
  }
  return out;
}

BraidWord garside_element(int n) {
  if (n < 2) throw std::invalid_argument("braid needs at least 2 strands");
  BraidWord w{n, {}};
  for (int k = 1; k < n; ++k) {
    for (int i = k; i >= 1; --i) w.letters.push_back(i);
  }
  return w;
}

BraidWord canonical_factorization(int n) {
  if (n < 2) throw std::invalid_argument("braid needs at least 2 strands");
  BraidWord w{n, {}};
  for (int low = 1; low < n; ++low) {
    for (int i = n - 1; i >= low; --i) w.letters.push_back(i);
  }
  return w;
}

namespace {

Permutation identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation reversal(int n) {
  Permutation p(n);
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

/// A * s_i: swap the final positions i-1 and i (1-based generator i).
void right_multiply(Permutation& a, int i) {
  for (int& x : a) {
    if (x == i - 1) {
      x = i;
    } else if (x == i) {
      x = i - 1;
    }
  }
}

/// s_i^{-1} * B
void left_divide(Permutation& b, int i) { std::swap(b[i - 1], b[i]); }

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = static_cast<int>(k);
  return out;
}

/// Delta X Delta^-1
Permutation tau(const Permutation& a) {
  const int n = static_cast<int>(a.size());
  Permutation out(n);
  for (int k = 0; k < n; ++k) out[k] = n - 1 - a[n - 1 - k];
  return out;
}

/// Some generator i with i in Start(b) and i not in Finish(a), or 0.
int movable_generator(const Permutation& a, const Permutation& b) {
  const Permutation a_inv = inverse(a);
  for (std::size_t i = 1; i < b.size(); ++i) {
    const bool starts = b[i - 1] > b[i];
    const bool finishes = a_inv[i - 1] > a_inv[i];
    if (starts && !finishes) return static_cast<int>(i);
  }
  return 0;
}

}  // namespace

Permutation permutation_of(const BraidWord& w) {
  Permutation p = identity(w.strands);
  for (int l : w.letters) right_multiply(p, std::abs(l));
  return p;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters) s += l > 0 ? 1 : -1;
  return s;
}

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands;
  NormalForm nf{n, 0, {}};
  for (int l : w.letters) {
    if (l == 0 || std::abs(l) >= n) throw std::invalid_argument("generator out of range");
    Permutation s = identity(n);
    if (l > 0) {
      right_multiply(s, l);
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); push Delta^-1 to the front
      for (auto& f : nf.factors) f = tau(f);
      --nf.delta_power;
      s = reversal(n);
      right_multiply(s, -l);
    }
    nf.factors.push_back(std::move(s));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) {
      while (const int i = movable_generator(nf.factors[k], nf.factors[k + 1])) {
        right_multiply(nf.factors[k], i);
        left_divide(nf.factors[k + 1], i);
        changed = true;
      }
    }
  }
  const Permutation delta = reversal(n), one = identity(n);
  std::size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead] == delta) ++lead;
  nf.delta_power += static_cast<int>(lead);
  nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!nf.factors.empty() && nf.factors.back() == one) nf.factors.pop_back();
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord w{nf.strands, {}};
  const BraidWord delta = garside_element(nf.strands);
  for (int k = 0; k < std::abs(nf.delta_power); ++k) {
    if (nf.delta_power > 0) {
      w.letters.insert(w.letters.end(), delta.letters.begin(), delta.letters.end());
    } else {
      for (auto it = delta.letters.rbegin(); it != delta.letters.rend(); ++it) w.letters.push_back(-*it);
    }
  }
  for (Permutation f : nf.factors) {
    // peel generators off the left: f = s_i f' while i is a starting generator
    while (true) {
      std::size_t i = 1;
      while (i < f.size() && f[i - 1] < f[i]) ++i;
      if (i == f.size()) break;
      w.letters.push_back(static_cast<int>(i));
      left_divide(f, static_cast<int>(i));
    }
  }
  return w;
}

std::string to_string(const NormalForm& nf) {
  std::ostringstream os;
  os << "D^" << nf.delta_power;
  for (const auto& f : nf.factors) {
    os << " [";
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k] + 1;
    os << "]";
  }
  return os.str();
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  return a.strands == b.strands && left_normal_form(a) == left_normal_form(b);
}

}  // namespace qpsurf
