#include "vbraid/bimodule.hpp"

#include <stdexcept>

namespace vbraid {

Bimodule Bimodule::summand(std::size_t i) const {
  const Summand& s = summands.at(i);
  Bimodule out;
  out.n = n;
  out.rank = s.rank;
  out.basis_labels.assign(basis_labels.begin() + static_cast<std::ptrdiff_t>(s.offset),
                          basis_labels.begin() + static_cast<std::ptrdiff_t>(s.offset + s.rank));
  out.basis_degrees.assign(basis_degrees.begin() + static_cast<std::ptrdiff_t>(s.offset),
                           basis_degrees.begin() + static_cast<std::ptrdiff_t>(s.offset + s.rank));
  for (const auto& a : right_action) out.right_action.push_back(a.block(s.offset, s.offset, s.rank, s.rank));
  out.summands = {Summand{0, s.rank, s.word}};
  out.factor_word = s.word;
  return out;
}

namespace {

Bimodule rank_one(int n, std::vector<Poly> images, std::string word) {
  Bimodule m;
  m.n = n;
  m.rank = 1;
  m.basis_labels = {"1"};
  m.basis_degrees = {0};
  for (auto& p : images) {
    PolyMatrix a(1, 1);
    a.at(0, 0) = std::move(p);
    m.right_action.push_back(std::move(a));
  }
  m.summands = {Summand{0, 1, word}};
  m.factor_word = std::move(word);
  return m;
}

}  // namespace

Bimodule bimodule_R(int n) {
  std::vector<Poly> im;
  for (int j = 0; j < n; ++j) im.push_back(Poly::variable(j));
  return rank_one(n, std::move(im), "R");
}

Bimodule bimodule_Rw(const CoxeterWord& w, int n) {
  LinearEndo e = word_endo(w, n);
  return rank_one(n, e.images(), "R(" + to_string(w) + ")");
}

Bimodule bimodule_Bs(const Reflection& t) {
  Bimodule m;
  m.n = t.n;
  m.rank = 2;
  m.basis_labels = {"1", "b"};
  m.basis_degrees = {0, 2};
  for (int j = 0; j < t.n; ++j) {
    Poly xj = Poly::variable(j);
    // columns: 1 * X_j and beta * X_j written as p + q beta with p, q invariant
    DemazureParts c0 = demazure_decompose(t, xj);
    DemazureParts c1 = demazure_decompose(t, xj * t.root);
    PolyMatrix a(2, 2);
    a.at(0, 0) = c0.invariant;
    a.at(1, 0) = c0.coefficient;
    a.at(0, 1) = c1.invariant;
    a.at(1, 1) = c1.coefficient;
    m.right_action.push_back(std::move(a));
  }
  std::string word = "B(" + to_string(t.word) + ")";
  m.summands = {Summand{0, 2, word}};
  m.factor_word = std::move(word);
  return m;
}

Bimodule shift(const Bimodule& m, int p) {
  Bimodule out = m;
  for (int& d : out.basis_degrees) d += p;
  if (p != 0) {
    auto tag = "{" + std::to_string(p) + "}";
    for (auto& s : out.summands) s.word += tag;
    out.factor_word += tag;
  }
  return out;
}

Bimodule zero_bimodule(int n) {
  Bimodule m;
  m.n = n;
  m.right_action.assign(static_cast<std::size_t>(n), PolyMatrix(0, 0));
  m.factor_word = "0";
  return m;
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  Bimodule out;
  out.n = parts.front().n;
  for (const auto& p : parts) out.rank += p.rank;
  out.right_action.assign(static_cast<std::size_t>(out.n), PolyMatrix(out.rank, out.rank));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    if (p.n != out.n) throw std::invalid_argument("direct_sum: rings differ");
    out.basis_labels.insert(out.basis_labels.end(), p.basis_labels.begin(), p.basis_labels.end());
    out.basis_degrees.insert(out.basis_degrees.end(), p.basis_degrees.begin(),
                             p.basis_degrees.end());
    for (int j = 0; j < out.n; ++j) {
      out.right_action[static_cast<std::size_t>(j)].set_block(
          offset, offset, p.right_action[static_cast<std::size_t>(j)]);
    }
    for (const auto& s : p.summands) {
      out.summands.push_back(Summand{offset + s.offset, s.rank, s.word});
    }
    if (!out.factor_word.empty()) out.factor_word += " + ";
    out.factor_word += p.factor_word;
    offset += p.rank;
  }
  return out;
}

namespace {

// Tensor product of two single-summand bimodules.
Bimodule tensor_simple(const Bimodule& m, const Bimodule& n) {
  Bimodule out;
  out.n = m.n;
  out.rank = m.rank * n.rank;
  for (std::size_t a = 0; a < m.rank; ++a) {
    for (std::size_t b = 0; b < n.rank; ++b) {
      out.basis_labels.push_back(m.basis_labels[a] + "." + n.basis_labels[b]);
      out.basis_degrees.push_back(m.basis_degrees[a] + n.basis_degrees[b]);
    }
  }
  MatrixEvaluator eval(m.right_action);
  for (int j = 0; j < m.n; ++j) {
    const PolyMatrix& bj = n.right_action[static_cast<std::size_t>(j)];
    PolyMatrix t(out.rank, out.rank);
    for (std::size_t c = 0; c < n.rank; ++c) {
      for (std::size_t b = 0; b < n.rank; ++b) {
        if (bj.at(c, b).is_zero()) continue;
        PolyMatrix e = eval.evaluate(bj.at(c, b));
        for (std::size_t a2 = 0; a2 < m.rank; ++a2) {
          for (std::size_t a = 0; a < m.rank; ++a) {
            t.at(a2 * n.rank + c, a * n.rank + b) = e.at(a2, a);
          }
        }
      }
    }
    out.right_action.push_back(std::move(t));
  }
  std::string word = m.factor_word + " * " + n.factor_word;
  if (m.factor_word == "R") word = n.factor_word;
  if (n.factor_word == "R") word = m.factor_word;
  out.summands = {Summand{0, out.rank, word}};
  out.factor_word = std::move(word);
  return out;
}

// id_A (x) g for single summands, g : B -> B2.
PolyMatrix id_tensor_simple(const Bimodule& a, const Bimodule& b, const Bimodule& b2,
                            const PolyMatrix& g) {
  PolyMatrix out(a.rank * b2.rank, a.rank * b.rank);
  MatrixEvaluator eval(a.right_action);
  for (std::size_t b1 = 0; b1 < b2.rank; ++b1) {
    for (std::size_t b0 = 0; b0 < b.rank; ++b0) {
      if (g.at(b1, b0).is_zero()) continue;
      PolyMatrix e = eval.evaluate(g.at(b1, b0));
      for (std::size_t a1 = 0; a1 < a.rank; ++a1) {
        for (std::size_t a0 = 0; a0 < a.rank; ++a0) {
          out.at(a1 * b2.rank + b1, a0 * b.rank + b0) = e.at(a1, a0);
        }
      }
    }
  }
  return out;
}

// f (x) id_B for single summands, f : A -> A2.
PolyMatrix tensor_id_simple(const Bimodule& a, const Bimodule& a2, const PolyMatrix& f,
                            const Bimodule& b) {
  PolyMatrix out(a2.rank * b.rank, a.rank * b.rank);
  for (std::size_t a1 = 0; a1 < a2.rank; ++a1) {
    for (std::size_t a0 = 0; a0 < a.rank; ++a0) {
      if (f.at(a1, a0).is_zero()) continue;
      for (std::size_t x = 0; x < b.rank; ++x) out.at(a1 * b.rank + x, a0 * b.rank + x) = f.at(a1, a0);
    }
  }
  return out;
}

std::vector<std::size_t> tensor_offsets(const Bimodule& m, const Bimodule& n) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& sm : m.summands) {
    for (const auto& sn : n.summands) {
      off.push_back(o);
      o += sm.rank * sn.rank;
    }
  }
  return off;
}

}  // namespace

Bimodule tensor(const Bimodule& m, const Bimodule& n) {
  if (m.n != n.n) throw std::invalid_argument("tensor: rings differ");
  if (m.rank == 0 || n.rank == 0) return zero_bimodule(m.n);
  if (m.summands.size() == 1 && n.summands.size() == 1) return tensor_simple(m, n);
  std::vector<Bimodule> parts;
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    Bimodule mi = m.summand(i);
    for (std::size_t j = 0; j < n.summands.size(); ++j) {
      parts.push_back(tensor_simple(mi, n.summand(j)));
    }
  }
  return direct_sum(parts);
}

PolyMatrix tensor_maps(const Bimodule& m, const Bimodule& m2, const PolyMatrix& f,
                       const Bimodule& n, const Bimodule& n2, const PolyMatrix& g) {
  // (f (x) id_{N2}) o (id_M (x) g)
  auto off_mn = tensor_offsets(m, n);
  auto off_mn2 = tensor_offsets(m, n2);
  auto off_m2n2 = tensor_offsets(m2, n2);
  std::size_t r_mn = 0, r_mn2 = 0, r_m2n2 = 0;
  for (const auto& s : m.summands) {
    for (const auto& t : n.summands) r_mn += s.rank * t.rank;
    for (const auto& t : n2.summands) r_mn2 += s.rank * t.rank;
  }
  for (const auto& s : m2.summands) {
    for (const auto& t : n2.summands) r_m2n2 += s.rank * t.rank;
  }

  PolyMatrix left(r_mn2, r_mn);
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    Bimodule mi = m.summand(i);
    for (std::size_t j = 0; j < n.summands.size(); ++j) {
      const Summand& sj = n.summands[j];
      for (std::size_t j2 = 0; j2 < n2.summands.size(); ++j2) {
        const Summand& sj2 = n2.summands[j2];
        PolyMatrix gb = g.block(sj2.offset, sj.offset, sj2.rank, sj.rank);
        if (gb.is_zero()) continue;
        PolyMatrix blk = id_tensor_simple(mi, n.summand(j), n2.summand(j2), gb);
        left.set_block(off_mn2[i * n2.summands.size() + j2], off_mn[i * n.summands.size() + j], blk);
      }
    }
  }

  PolyMatrix right(r_m2n2, r_mn2);
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    const Summand& si = m.summands[i];
    for (std::size_t i2 = 0; i2 < m2.summands.size(); ++i2) {
      const Summand& si2 = m2.summands[i2];
      PolyMatrix fb = f.block(si2.offset, si.offset, si2.rank, si.rank);
      if (fb.is_zero()) continue;
      Bimodule mi = m.summand(i);
      Bimodule mi2 = m2.summand(i2);
      for (std::size_t j = 0; j < n2.summands.size(); ++j) {
        PolyMatrix blk = tensor_id_simple(mi, mi2, fb, n2.summand(j));
        right.set_block(off_m2n2[i2 * n2.summands.size() + j], off_mn2[i * n2.summands.size() + j],
                        blk);
      }
    }
  }
  return right * left;
}

PolyMatrix right_multiplication(const Bimodule& m, const Poly& p) {
  MatrixEvaluator eval(m.right_action);
  return eval.evaluate(p);
}

std::vector<Poly> unit_times(const Bimodule& m, const Poly& p) {
  PolyMatrix r = right_multiplication(m, p);
  std::vector<Poly> out(m.rank);
  for (std::size_t k = 0; k < m.rank; ++k) out[k] = r.at(k, 0);
  return out;
}

namespace {

Check check_entry_degrees(const PolyMatrix& a, const Bimodule& source, const Bimodule& target,
                          int shift, const std::string& what) {
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Poly& p = a.at(k, l);
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      int want = forced_degree(source, target, k, l, shift);
      if (!d || *d != want) {
        return Check::fail(what + " entry (" + std::to_string(k) + "," + std::to_string(l) +
                           ") = " + p.to_string() + " is not homogeneous of degree " +
                           std::to_string(want));
      }
    }
  }
  return Check::pass();
}

}  // namespace

Check check_bimodule(const Bimodule& m) {
  if (m.right_action.size() != static_cast<std::size_t>(m.n)) {
    return Check::fail("wrong number of right-action matrices");
  }
  for (int j = 0; j < m.n; ++j) {
    const auto& a = m.right_action[static_cast<std::size_t>(j)];
    if (a.rows() != m.rank || a.cols() != m.rank) return Check::fail("right action has wrong shape");
    Check c = check_entry_degrees(a, m, m, 2, "right action X" + std::to_string(j));
    if (!c) return c;
  }
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      const auto& a = m.right_action[static_cast<std::size_t>(i)];
      const auto& b = m.right_action[static_cast<std::size_t>(j)];
      if (!(a * b == b * a)) {
        return Check::fail("right actions of X" + std::to_string(i) + " and X" + std::to_string(j) +
                           " do not commute");
      }
    }
  }
  return Check::pass();
}

Check check_morphism(const Bimodule& source, const Bimodule& target, const PolyMatrix& matrix,
                     int shift) {
  if (matrix.rows() != target.rank || matrix.cols() != source.rank) {
    return Check::fail("morphism matrix has shape " + std::to_string(matrix.rows()) + "x" +
                       std::to_string(matrix.cols()) + ", expected " + std::to_string(target.rank) +
                       "x" + std::to_string(source.rank));
  }
  Check c = check_entry_degrees(matrix, source, target, shift, "morphism");
  if (!c) return c;
  for (int j = 0; j < source.n; ++j) {
    PolyMatrix lhs = matrix * source.right_action[static_cast<std::size_t>(j)];
    PolyMatrix rhs = target.right_action[static_cast<std::size_t>(j)] * matrix;
    if (lhs == rhs) continue;
    for (std::size_t k = 0; k < lhs.rows(); ++k) {
      for (std::size_t l = 0; l < lhs.cols(); ++l) {
        if (!(lhs.at(k, l) == rhs.at(k, l))) {
          return Check::fail("not right-linear for X" + std::to_string(j) + " at (" +
                             std::to_string(k) + "," + std::to_string(l) +
                             "): residual " + (lhs.at(k, l) - rhs.at(k, l)).to_string());
        }
      }
    }
  }
  return Check::pass();
}

}  // namespace vbraid
