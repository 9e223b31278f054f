#include "affevac/affine.hpp"

#include <sstream>
#include <stdexcept>

#include "affevac/tabloid.hpp"

namespace affevac {

AffinePermutation::AffinePermutation(int modulus, std::vector<long long> w)
    : n(modulus), window(std::move(w)) {
  if (static_cast<int>(window.size()) != n)
    throw std::invalid_argument("window length must equal the modulus");
  std::vector<char> seen(n + 1, 0);
  for (long long x : window) {
    int r = static_cast<int>(((x % n) + n) % n);
    if (r == 0) r = n;
    if (seen[r]) throw std::invalid_argument("window entries must be pairwise incongruent mod n");
    seen[r] = 1;
  }
}

AffinePermutation rotate(const AffinePermutation& w) {
  std::vector<long long> out(w.n);
  for (int i = 0; i < w.n; ++i) out[i] = w.n + 1 - w.window[w.n - 1 - i];
  return AffinePermutation(w.n, std::move(out));
}

std::set<int> affine_descents(const AffinePermutation& w) {
  std::set<int> des;
  for (int i = 1; i <= w.n; ++i) {
    long long a = w.window[i - 1];
    long long b = (i == w.n) ? w.window[0] + w.n : w.window[i];
    if (a > b) des.insert(i);
  }
  return des;
}

AffinePermutation parse_affine(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<long long> window;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    window.push_back(std::stoll(tok));
  }
  if (window.empty()) throw std::invalid_argument("empty window");
  int n = static_cast<int>(window.size());
  return AffinePermutation(n, std::move(window));
}

std::string format_affine(const AffinePermutation& w) {
  std::string s = "[";
  for (int i = 0; i < w.n; ++i) {
    if (i) s += ",";
    s += std::to_string(w.window[i]);
  }
  return s + "]";
}

}  // namespace affevac
