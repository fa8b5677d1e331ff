#include "extri/quiver.hpp"

#include <sstream>

#include "extri/errors.hpp"

namespace extri {

Quiver::Quiver(std::vector<int> vertex_ids, std::vector<Arrow> arrows)
    : vertex_ids_(std::move(vertex_ids)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertex_ids_[i], static_cast<int>(i)).second) {
      throw Error("duplicate vertex id " + std::to_string(vertex_ids_[i]));
    }
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.source < 0 || ar.target < 0 || static_cast<std::size_t>(ar.source) >= vertex_ids_.size() ||
        static_cast<std::size_t>(ar.target) >= vertex_ids_.size()) {
      throw UnknownSymbolError("arrow '" + ar.name + "' has an undeclared endpoint");
    }
    if (!arrow_lookup_.emplace(ar.name, static_cast<int>(a)).second) {
      throw Error("duplicate arrow name '" + ar.name + "'");
    }
  }
}

int Quiver::vertex_index(int id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int Quiver::arrow_index(std::string_view name) const {
  auto it = arrow_lookup_.find(name);
  return it == arrow_lookup_.end() ? -1 : it->second;
}

namespace {

// One candidate of degree L+1: basis path of degree L followed by an arrow.
struct Candidate {
  int prefix;
  int arrow;
};

void axpy(const PrimeField& f, SparseVec& acc, const SparseVec& v, Scalar c) {
  if (c == 0) return;
  for (auto [idx, x] : v) {
    Scalar add = f.mul(c, x);
    bool found = false;
    for (auto& [j, y] : acc) {
      if (j == idx) {
        y = f.add(y, add);
        found = true;
        break;
      }
    }
    if (!found) acc.emplace_back(idx, add);
  }
  std::erase_if(acc, [](const auto& e) { return e.second == 0; });
}

}  // namespace

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::build(Quiver quiver, std::uint32_t p,
                                                                    std::vector<Relation> relations,
                                                                    const AlgebraOptions& options) {
  std::shared_ptr<BoundQuiverAlgebra> alg(new BoundQuiverAlgebra());
  alg->field_ = PrimeField(p);
  const PrimeField& f = alg->field_;
  const std::size_t nv = quiver.num_vertices();
  const std::size_t na = quiver.num_arrows();

  // Validate relations: parallel, homogeneous, length >= 2.
  for (auto& rel : relations) {
    if (rel.terms.empty()) throw Error("empty relation");
    std::size_t len = rel.terms.front().second.size();
    int src = -1, tgt = -1;
    for (auto& [c, arrows] : rel.terms) {
      c %= p;
      if (arrows.size() < 2) throw Error("relation terms must be paths of length at least 2");
      if (arrows.size() != len) {
        throw Error("relation terms must all have the same length (homogeneous relations only)");
      }
      for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
        if (quiver.arrow(arrows[k]).target != quiver.arrow(arrows[k + 1]).source) {
          throw Error("relation term is not a path: arrows '" + quiver.arrow(arrows[k]).name + "' and '" +
                      quiver.arrow(arrows[k + 1]).name + "' do not compose");
        }
      }
      int s = quiver.arrow(arrows.front()).source;
      int t = quiver.arrow(arrows.back()).target;
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw Error("relation terms are not parallel paths");
      }
    }
  }

  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  const Quiver& q = alg->quiver_;

  // Degree 0: trivial paths.
  std::vector<int> current;
  for (std::size_t v = 0; v < nv; ++v) {
    alg->basis_.push_back(Path{static_cast<int>(v), static_cast<int>(v), {}});
    current.push_back(static_cast<int>(v));
  }
  alg->right_.assign(nv, std::vector<SparseVec>(na));

  std::vector<Candidate> prev_candidates;
  std::vector<std::vector<Scalar>> prev_rows;  // reduced generators of the ideal in the previous degree

  std::size_t degree = 0;
  while (!current.empty()) {
    if (degree >= options.max_path_length) {
      std::string witness = alg->path_name(alg->basis_[static_cast<std::size_t>(current.front())]);
      throw NonAdmissibleError("relation ideal is not admissible: nonzero paths of length " +
                                   std::to_string(degree) + " survive (bound " +
                                   std::to_string(options.max_path_length) + ")",
                               witness);
    }
    std::vector<Candidate> cand;
    std::map<std::pair<int, int>, std::size_t> cand_index;
    for (int s : current) {
      int t = alg->basis_[static_cast<std::size_t>(s)].target;
      for (std::size_t b = 0; b < na; ++b) {
        if (q.arrow(static_cast<int>(b)).source == t) {
          cand_index[{s, static_cast<int>(b)}] = cand.size();
          cand.push_back({s, static_cast<int>(b)});
        }
      }
    }
    if (cand.size() > options.max_paths_per_degree) {
      throw NonAdmissibleError("path dimension explosion in degree " + std::to_string(degree + 1),
                               alg->path_name(alg->basis_[static_cast<std::size_t>(current.front())]));
    }

    // Expresses (degree-L combination) followed by arrow b in candidate coordinates.
    auto to_candidates = [&](const SparseVec& prefix_nf, int b, Scalar c, std::vector<Scalar>& row) {
      for (auto [s, x] : prefix_nf) {
        auto it = cand_index.find({s, b});
        if (it == cand_index.end()) throw std::logic_error("normal form left the candidate set");
        row[it->second] = f.add(row[it->second], f.mul(c, x));
      }
    };

    std::vector<std::vector<Scalar>> gens;
    // Left multiples a * w of the previous degree's generators.
    for (const auto& w : prev_rows) {
      int w_src = -1;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == 0) continue;
        int s = alg->basis_[static_cast<std::size_t>(prev_candidates[j].prefix)].source;
        if (w_src >= 0 && s != w_src) throw std::logic_error("ideal generator mixes sources");
        w_src = s;
      }
      if (w_src < 0) continue;
      for (std::size_t a = 0; a < na; ++a) {
        if (q.arrow(static_cast<int>(a)).target != w_src) continue;
        std::vector<Scalar> row(cand.size(), 0);
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (w[j] == 0) continue;
          SparseVec nf = alg->prepend_arrow(static_cast<int>(a), prev_candidates[j].prefix);
          to_candidates(nf, prev_candidates[j].arrow, w[j], row);
        }
        gens.push_back(std::move(row));
      }
    }
    // Relations living in this degree.
    for (const auto& rel : alg->relations_) {
      if (rel.terms.front().second.size() != degree + 1) continue;
      std::vector<Scalar> row(cand.size(), 0);
      for (const auto& [c, arrows] : rel.terms) {
        std::vector<int> prefix(arrows.begin(), arrows.end() - 1);
        SparseVec nf = alg->normal_form(q.arrow(arrows.front()).source, prefix);
        to_candidates(nf, arrows.back(), c, row);
      }
      gens.push_back(std::move(row));
    }

    std::vector<bool> is_pivot(cand.size(), false);
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivot_of_row;
    if (!gens.empty() && !cand.empty()) {
      Echelon e = row_reduce(Matrix::from_rows(p, gens));
      for (std::size_t r = 0; r < e.rank(); ++r) {
        rows.push_back(e.reduced.row(r));
        pivot_of_row.push_back(e.pivots[r]);
        is_pivot[e.pivots[r]] = true;
      }
    }

    std::vector<int> new_index(cand.size(), -1);
    std::vector<int> next;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (is_pivot[j]) continue;
      const Path& pre = alg->basis_[static_cast<std::size_t>(cand[j].prefix)];
      Path path = pre;
      path.arrows.push_back(cand[j].arrow);
      path.target = q.arrow(cand[j].arrow).target;
      new_index[j] = static_cast<int>(alg->basis_.size());
      next.push_back(new_index[j]);
      alg->basis_.push_back(std::move(path));
      alg->right_.emplace_back(na);
    }
    for (std::size_t j = 0; j < cand.size(); ++j) {
      SparseVec nf;
      if (!is_pivot[j]) {
        nf.emplace_back(new_index[j], 1);
      }
      alg->right_[static_cast<std::size_t>(cand[j].prefix)][static_cast<std::size_t>(cand[j].arrow)] = nf;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      SparseVec nf;
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if (j == pivot_of_row[r] || rows[r][j] == 0) continue;
        nf.emplace_back(new_index[j], f.neg(rows[r][j]));
      }
      const Candidate& c = cand[pivot_of_row[r]];
      alg->right_[static_cast<std::size_t>(c.prefix)][static_cast<std::size_t>(c.arrow)] = nf;
    }

    prev_candidates = std::move(cand);
    prev_rows = std::move(rows);
    current = std::move(next);
    ++degree;
  }
  alg->loewy_length_ = degree;

  alg->from_.assign(nv, {});
  alg->to_.assign(nv, {});
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
    alg->from_[static_cast<std::size_t>(alg->basis_[i].source)].push_back(static_cast<int>(i));
    alg->to_[static_cast<std::size_t>(alg->basis_[i].target)].push_back(static_cast<int>(i));
  }
  return alg;
}

const SparseVec& BoundQuiverAlgebra::append_arrow(int s, int b) const {
  return right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)];
}

SparseVec BoundQuiverAlgebra::normal_form(int source, const std::vector<int>& arrows) const {
  SparseVec v{{source, 1}};
  int at = source;
  for (int b : arrows) {
    if (quiver_.arrow(b).source != at) throw std::invalid_argument("normal_form: arrows do not compose");
    at = quiver_.arrow(b).target;
    SparseVec next;
    for (auto [s, c] : v) axpy(field_, next, right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)], c);
    v = std::move(next);
    if (v.empty()) break;
  }
  return v;
}

SparseVec BoundQuiverAlgebra::prepend_arrow(int a, int s) const {
  std::vector<int> arrows{a};
  const Path& path = basis_[static_cast<std::size_t>(s)];
  if (quiver_.arrow(a).target != path.source) throw std::invalid_argument("prepend_arrow: not composable");
  arrows.insert(arrows.end(), path.arrows.begin(), path.arrows.end());
  return normal_form(quiver_.arrow(a).source, arrows);
}

std::string BoundQuiverAlgebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e" + std::to_string(quiver_.vertex_ids()[static_cast<std::size_t>(p.source)]);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += quiver_.arrow(p.arrows[k]).name;
  }
  return s;
}

std::string BoundQuiverAlgebra::to_text() const {
  std::ostringstream os;
  os << "field " << p() << "\n";
  os << "vertices";
  for (int id : quiver_.vertex_ids()) os << " " << id;
  os << "\n";
  for (const auto& a : quiver_.arrows()) {
    os << "arrow " << a.name << ": " << quiver_.vertex_ids()[static_cast<std::size_t>(a.source)] << " -> "
       << quiver_.vertex_ids()[static_cast<std::size_t>(a.target)] << "\n";
  }
  for (const auto& rel : relations_) {
    os << "relation";
    bool first = true;
    for (const auto& [c, arrows] : rel.terms) {
      os << (first ? " " : " + ");
      first = false;
      if (c != 1) os << c << "*";
      Path path{0, 0, arrows};
      os << path_name(path);
    }
    os << "\n";
  }
  return os.str();
}

std::uint64_t BoundQuiverAlgebra::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_text()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

AlgebraPtr nakayama_cyclic(int n, int r, std::uint32_t p) {
  if (n < 1 || r < 2) throw std::invalid_argument("nakayama_cyclic requires n >= 1 and r >= 2");
  std::vector<int> ids;
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) {
    ids.push_back(i + 1);
    arrows.push_back({n == 1 ? "x" : "x" + std::to_string(i + 1), i, (i + 1) % n});
  }
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i) {
    Relation rel;
    std::vector<int> path;
    for (int k = 0; k < r; ++k) path.push_back((i + k) % n);
    rel.terms.emplace_back(1, path);
    rels.push_back(std::move(rel));
  }
  return BoundQuiverAlgebra::build(Quiver(ids, arrows), p, rels);
}

AlgebraPtr linear_nakayama(int n, int r, std::uint32_t p) {
  if (n < 1 || r < 2) throw std::invalid_argument("linear_nakayama requires n >= 1 and r >= 2");
  std::vector<int> ids;
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) ids.push_back(i + 1);
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  std::vector<Relation> rels;
  for (int i = 0; i + r < n; ++i) {
    Relation rel;
    std::vector<int> path;
    for (int k = 0; k < r; ++k) path.push_back(i + k);
    rel.terms.emplace_back(1, path);
    rels.push_back(std::move(rel));
  }
  return BoundQuiverAlgebra::build(Quiver(ids, arrows), p, rels);
}

}  // namespace extri
