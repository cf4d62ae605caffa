#include "tauhh/classify.hpp"

namespace tauhh {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "infinite";
    case Verdict::Disproved: return "finite";
    case Verdict::Evidence: return "evidence";
    case Verdict::NoEvidence: return "no evidence";
  }
  return "?";
}

bool rsq_exact_infinitude(const Quiver& q, std::size_t y, std::size_t x) {
  return has_unbounded_paths(q, x, y);
}

bool is_radical_square_zero(const FDAlgebra& a) {
  for (const Path& p : enumerate_paths(a.quiver(), 2)) {
    if (!a.normal_form(p).empty()) return false;
  }
  return true;
}

namespace {

std::string pair_name(const Quiver& q, const VertexPair& p) {
  return "(" + q.vertex_name(p.first) + ", " + q.vertex_name(p.second) + ")";
}

}  // namespace

ClassificationReport classify(const FDAlgebra& a, const ExtTorTable& table) {
  const Quiver& q = a.quiver();
  const std::size_t nv = q.num_vertices();
  const std::size_t n = table.bound;
  ClassificationReport r;
  r.bound = n;
  r.global_dimension = global_dimension(table);
  r.local = nv == 1;
  r.monomial = a.is_monomial();
  r.radical_square_zero = is_radical_square_zero(a);
  r.has_loop = classify_shape(q).has_loop;

  r.all_peirce_nonzero = true;
  r.some_peirce_nonzero = true;
  for (std::size_t y = 0; y < nv; ++y) {
    for (std::size_t x = 0; x < nv; ++x) {
      bool forward = a.peirce_dim(y, x) != 0, backward = a.peirce_dim(x, y) != 0;
      r.all_peirce_nonzero = r.all_peirce_nonzero && forward && backward;
      r.some_peirce_nonzero = r.some_peirce_nonzero && (forward || backward);
      if (!forward || n == 0) continue;
      if (table.at(n, y, x) != 0) r.plus_witnesses.push_back({y, x});
      if (table.at(n, x, y) != 0) r.coplus_witnesses.push_back({y, x});
    }
  }

  r.plus = r.plus_witnesses.empty() ? Verdict::NoEvidence : Verdict::Evidence;
  r.coplus = r.coplus_witnesses.empty() ? Verdict::NoEvidence : Verdict::Evidence;
  auto settle = [&](Verdict v, const std::string& why) {
    r.plus = r.coplus = v;
    r.notes.push_back(why);
  };

  if (r.global_dimension.exact) {
    settle(Verdict::Disproved, "global dimension " + std::to_string(r.global_dimension.value) +
                                   ": every Tor space between simples is finite");
  } else if (r.radical_square_zero) {
    bool plus = false, coplus = false;
    for (std::size_t y = 0; y < nv; ++y) {
      for (std::size_t x = 0; x < nv; ++x) {
        if (a.peirce_dim(y, x) == 0) continue;
        plus = plus || rsq_exact_infinitude(q, x, y);
        coplus = coplus || rsq_exact_infinitude(q, y, x);
      }
    }
    r.plus = plus ? Verdict::Proved : Verdict::Disproved;
    r.coplus = coplus ? Verdict::Proved : Verdict::Disproved;
    r.notes.push_back("radical square zero: Tor dimensions count paths, decided by reachability");
  } else if (r.local && a.dim() > 1) {
    settle(Verdict::Proved,
           "nontrivial local algebra: infinite + and infinite co+ global dimension");
  } else if (r.has_loop && r.all_peirce_nonzero) {
    settle(Verdict::Proved,
           "the loop forces infinite global dimension, and every Peirce component is nonzero");
  } else if (r.has_loop && r.monomial) {
    settle(Verdict::Proved,
           "monomial with a loop: the extension conjecture holds, so Tor at the loop vertex is "
           "infinite");
  } else {
    r.notes.push_back("Ext computed up to degree " + std::to_string(n) +
                      " without a finite resolution; verdicts are evidence up to N only");
  }

  if (r.has_loop) {
    r.notes.push_back("the quiver has a loop, so the global dimension is infinite");
  }
  if (!r.global_dimension.exact) {
    if (r.all_peirce_nonzero) {
      r.notes.push_back("every yΛx and xΛy is nonzero: infinite global dimension implies "
                        "infinite + and infinite co+ global dimension");
    } else if (r.some_peirce_nonzero) {
      r.notes.push_back("every pair has yΛx or xΛy nonzero: infinite global dimension implies "
                        "infinite + and/or infinite co+ global dimension");
    }
  }
  for (const auto& p : r.plus_witnesses) {
    r.notes.push_back("+ evidence at bound " + std::to_string(n) + ": " + pair_name(q, p));
  }
  for (const auto& p : r.coplus_witnesses) {
    r.notes.push_back("co+ evidence at bound " + std::to_string(n) + ": " + pair_name(q, p));
  }
  return r;
}

}  // namespace tauhh
