// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "tacsearch/knn_db.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tacsearch/errors.hpp"
#include "tacsearch/syntax.hpp"

namespace tacsearch {

std::string_view origin_name(Origin o) { return o == Origin::Human ? "human" : "generated"; }

FeatureDb::FeatureDb() : FeatureDb(FeatureOptions{}) {}

FeatureDb::FeatureDb(const FeatureOptions& options)
    : options_(options), sig_(Signature::standard()) {}

FeatureDb::FeatureDb(const FeatureDb& other)
    : options_(other.options_),
      sig_(other.sig_),
      feature_names_(other.feature_names_),
      feature_ids_(other.feature_ids_),
      df_(other.df_),
      goals_(other.goals_),
      goal_features_(other.goal_features_),
      theorem_vectors_(other.theorem_vectors_),
      theorem_features_(other.theorem_features_),
      theorem_vector_index_(other.theorem_vector_index_),
      statements_(other.statements_),
      statement_features_(other.statement_features_),
      statement_index_(other.statement_index_),
      tactic_rows_(other.tactic_rows_),
      tactic_order_(other.tactic_order_) {}

FeatureDb& FeatureDb::operator=(const FeatureDb& other) {
  if (this == &other) return *this;
  FeatureDb copy(other);
  options_ = copy.options_;
  sig_ = std::move(copy.sig_);
  feature_names_ = std::move(copy.feature_names_);
  feature_ids_ = std::move(copy.feature_ids_);
  df_ = std::move(copy.df_);
  goals_ = std::move(copy.goals_);
  goal_features_ = std::move(copy.goal_features_);
  theorem_vectors_ = std::move(copy.theorem_vectors_);
  theorem_features_ = std::move(copy.theorem_features_);
  theorem_vector_index_ = std::move(copy.theorem_vector_index_);
  statements_ = std::move(copy.statements_);
  statement_features_ = std::move(copy.statement_features_);
  statement_index_ = std::move(copy.statement_index_);
  tactic_rows_ = std::move(copy.tactic_rows_);
  tactic_order_ = std::move(copy.tactic_order_);
  invalidate();
  return *this;
}

void FeatureDb::invalidate() {
  std::lock_guard<std::mutex> lock(weight_mutex_);
  weight_cache_.clear();
}

void FeatureDb::declare_constant(const std::string& name, const Type& type) {
  sig_.declare(name, type);
}

IdVector FeatureDb::intern_all(const FeatureSet& features) {
  IdVector ids;
  ids.reserve(features.size());
  for (const std::string& f : features) {
    auto [it, inserted] = feature_ids_.emplace(f, static_cast<int>(feature_names_.size()));
    if (inserted) {
      feature_names_.push_back(f);
      df_.push_back(0);
    }
    ids.push_back(it->second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void FeatureDb::add_statement(const Theorem& thm) {
  if (statement_index_.count(thm.name)) {
    throw CorpusError("theorem '" + thm.name + "' recorded twice");
  }
  statement_index_.emplace(thm.name, statements_.size());
  statements_.push_back(thm);
  statement_features_.push_back(intern_all(features_of_statement(thm, options_)));
  invalidate();
}

void FeatureDb::add_goal_vector(const std::string& tactic, const FeatureSet& features,
                                Origin origin, std::size_t sequence_index) {
  IdVector ids = intern_all(features);
  for (int id : ids) ++df_[static_cast<std::size_t>(id)];
  auto& rows = tactic_rows_[tactic];
  if (rows.empty()) tactic_order_.push_back(tactic);
  rows.push_back(goals_.size());
  goals_.push_back(GoalVector{tactic, ids, origin, sequence_index});
  goal_features_.push_back(std::move(ids));
  invalidate();
}

void FeatureDb::add_theorem_vector(const std::string& name, const FeatureSet& features,
                                   const std::vector<std::string>& tactics,
                                   std::size_t sequence_index) {
  auto it = theorem_vector_index_.find(name);
  if (it == theorem_vector_index_.end()) {
    IdVector ids = intern_all(features);
    theorem_vector_index_.emplace(name, theorem_vectors_.size());
    theorem_vectors_.push_back(TheoremVector{name, ids, {}, sequence_index});
    theorem_features_.push_back(std::move(ids));
    it = theorem_vector_index_.find(name);
  }
  auto& tacs = theorem_vectors_[it->second].tactics;
  for (const std::string& t : tactics) {
    if (std::find(tacs.begin(), tacs.end(), t) == tacs.end()) tacs.push_back(t);
  }
  invalidate();
}

int FeatureDb::find_feature(std::string_view f) const {
  auto it = feature_ids_.find(std::string(f));
  return it == feature_ids_.end() ? -1 : it->second;
}

Query FeatureDb::query(const FeatureSet& features) const {
  Query q;
  for (const std::string& f : features) {
    const int id = find_feature(f);
    if (id < 0) {
      ++q.unknown;
    } else {
      q.known.push_back(id);
    }
  }
  std::sort(q.known.begin(), q.known.end());
  q.known.erase(std::unique(q.known.begin(), q.known.end()), q.known.end());
  return q;
}

Query FeatureDb::query(const Goal& goal) const { return query(features_of_goal(goal, options_)); }

FeatureSet FeatureDb::names_of(const IdVector& ids) const {
  FeatureSet out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(feature_name(id));
  std::sort(out.begin(), out.end());
  return out;
}

const Theorem* FeatureDb::statement(const std::string& name) const {
  auto it = statement_index_.find(name);
  return it == statement_index_.end() ? nullptr : &statements_[it->second];
}

const std::vector<std::size_t>& FeatureDb::rows_of(const std::string& tactic) const {
  static const std::vector<std::size_t> none;
  auto it = tactic_rows_.find(tactic);
  return it == tactic_rows_.end() ? none : it->second;
}

std::size_t FeatureDb::doc_frequency(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= df_.size()) return 0;
  return df_[static_cast<std::size_t>(id)];
}

double FeatureDb::tfidf(std::size_t total_docs, std::size_t df) {
  if (total_docs == 0) return 0.0;
  const double v = std::log(static_cast<double>(total_docs) / (1.0 + static_cast<double>(df)));
  return v > 0.0 ? v : 0.0;
}

const std::vector<double>& FeatureDb::powered_weights(double tau) const {
  std::lock_guard<std::mutex> lock(weight_mutex_);
  auto it = weight_cache_.find(tau);
  if (it != weight_cache_.end() && it->second.size() == df_.size()) return it->second;
  std::vector<double> w(df_.size());
  for (std::size_t i = 0; i < df_.size(); ++i) w[i] = std::pow(tfidf(total_docs(), df_[i]), tau);
  auto& slot = weight_cache_[tau];
  slot = std::move(w);
  return slot;
}

long FeatureDb::max_sequence_index() const {
  long m = -1;
  for (const GoalVector& g : goals_) m = std::max(m, static_cast<long>(g.sequence_index));
  for (const TheoremVector& t : theorem_vectors_) {
    m = std::max(m, static_cast<long>(t.sequence_index));
  }
  for (const Theorem& t : statements_) m = std::max(m, static_cast<long>(t.sequence_index));
  return m;
}

// Content equality: feature ids depend on interning order, which a save/load
// round trip does not preserve, so features are compared by name.
bool operator==(const FeatureDb& a, const FeatureDb& b) {
  if (!(a.sig_ == b.sig_) || a.feature_names_.size() != b.feature_names_.size()) return false;
  for (std::size_t i = 0; i < a.feature_names_.size(); ++i) {
    const int j = b.find_feature(a.feature_names_[i]);
    if (j < 0 || a.df_[i] != b.df_[static_cast<std::size_t>(j)]) return false;
  }
  if (a.goals_.size() != b.goals_.size() || a.theorem_vectors_.size() != b.theorem_vectors_.size() ||
      a.statements_.size() != b.statements_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.goals_.size(); ++i) {
    const GoalVector& x = a.goals_[i];
    const GoalVector& y = b.goals_[i];
    if (x.tactic != y.tactic || a.names_of(x.features) != b.names_of(y.features) ||
        x.origin != y.origin ||
        x.sequence_index != y.sequence_index) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.theorem_vectors_.size(); ++i) {
    const TheoremVector& x = a.theorem_vectors_[i];
    const TheoremVector& y = b.theorem_vectors_[i];
    if (x.name != y.name || a.names_of(x.features) != b.names_of(y.features) ||
        x.tactics != y.tactics ||
        x.sequence_index != y.sequence_index) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.statements_.size(); ++i) {
    const Theorem& x = a.statements_[i];
    const Theorem& y = b.statements_[i];
    if (x.name != y.name || x.dependencies != y.dependencies ||
        x.sequence_index != y.sequence_index || !goal_equal(x.statement, y.statement)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   C <name> <type>                       declared constant
//   S <seq> <name> <dep;dep> <statement>  theorem statement; empty name only
//                                         sets the sequence index
//   G <origin> <tactic> <f,f,...>         goal vector at the current index
//   T <name> <tac;tac> <f,f,...>          theorem vector

namespace {

std::string join(const std::vector<std::string>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

void FeatureDb::save(std::ostream& out) const {
  for (const auto& [name, type] : sig_.declarations()) {
    out << "C\t" << name << '\t' << type_to_string(type) << '\n';
  }
  // Entries are grouped by sequence index; inside a group the statement
  // comes first, then goal vectors in recording order, then the theorem
  // vector.
  std::map<std::size_t, const Theorem*> stmt_at;
  for (const Theorem& t : statements_) stmt_at.emplace(t.sequence_index, &t);
  std::map<std::size_t, std::vector<std::size_t>> goals_at;
  for (std::size_t i = 0; i < goals_.size(); ++i) goals_at[goals_[i].sequence_index].push_back(i);
  std::map<std::size_t, std::vector<std::size_t>> thms_at;
  for (std::size_t i = 0; i < theorem_vectors_.size(); ++i) {
    thms_at[theorem_vectors_[i].sequence_index].push_back(i);
  }
  std::vector<std::size_t> seqs;
  for (const auto& [s, _] : stmt_at) seqs.push_back(s);
  for (const auto& [s, _] : goals_at) seqs.push_back(s);
  for (const auto& [s, _] : thms_at) seqs.push_back(s);
  std::sort(seqs.begin(), seqs.end());
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
  for (std::size_t s : seqs) {
    if (auto it = stmt_at.find(s); it != stmt_at.end()) {
      const Theorem& t = *it->second;
      out << "S\t" << s << '\t' << t.name << '\t' << join(t.dependencies, ';') << '\t'
          << print_goal(t.statement) << '\n';
    } else {
      out << "S\t" << s << "\t\t\t\n";
    }
    if (auto it = goals_at.find(s); it != goals_at.end()) {
      for (std::size_t i : it->second) {
        out << "G\t" << origin_name(goals_[i].origin) << '\t' << goals_[i].tactic << '\t'
            << join(names_of(goal_features_[i]), ',') << '\n';
      }
    }
    if (auto it = thms_at.find(s); it != thms_at.end()) {
      for (std::size_t i : it->second) {
        const TheoremVector& t = theorem_vectors_[i];
        out << "T\t" << t.name << '\t' << join(t.tactics, ';') << '\t'
            << join(names_of(theorem_features_[i]), ',') << '\n';
      }
    }
  }
}

void FeatureDb::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  save(out);
}

FeatureDb FeatureDb::load(std::istream& in) {
  FeatureDb db;
  std::string line;
  std::size_t lineno = 0;
  std::size_t seq = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    {
      std::size_t start = 0;
      while (true) {
        const std::size_t p = line.find('\t', start);
        f.push_back(line.substr(start, p - start));
        if (p == std::string::npos) break;
        start = p + 1;
      }
    }
    auto need = [&](std::size_t n) {
      if (f.size() != n) {
        throw ParseError("malformed '" + f[0] + "' record: expected " + std::to_string(n) +
                             " fields, found " + std::to_string(f.size()),
                         lineno, 1);
      }
    };
    try {
      if (f[0] == "C") {
        need(3);
        db.declare_constant(f[1], parse_type(f[2]));
      } else if (f[0] == "S") {
        need(5);
        std::size_t pos = 0;
        seq = std::stoul(f[1], &pos);
        if (pos != f[1].size()) throw ParseError("bad sequence index");
        if (!f[2].empty()) {
          Theorem t;
          t.name = f[2];
          t.dependencies = split(f[3], ';');
          t.statement = parse_goal(f[4], db.sig_);
          t.sequence_index = seq;
          db.add_statement(t);
        }
      } else if (f[0] == "G") {
        need(4);
        Origin o;
        if (f[1] == "human") {
          o = Origin::Human;
        } else if (f[1] == "generated") {
          o = Origin::Generated;
        } else {
          throw ParseError("unknown origin '" + f[1] + "'");
        }
        if (f[2].empty()) throw ParseError("empty tactic string");
        db.add_goal_vector(f[2], split(f[3], ','), o, seq);
      } else if (f[0] == "T") {
        need(4);
        db.add_theorem_vector(f[1], split(f[3], ','), split(f[2], ';'), seq);
      } else {
        throw ParseError("unknown record type '" + f[0] + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() == lineno) throw;
      throw ParseError(e.message(), lineno, e.column() ? e.column() : 1);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  return db;
}

FeatureDb FeatureDb::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return load(in);
}

// ---------------------------------------------------------------------------
// Scoring

namespace {

double self_raw(const FeatureDb& db, const Query& fo, double tau) {
  const auto& w = db.powered_weights(tau);
  double s = 0.0;
  for (int id : fo.known) s += w[static_cast<std::size_t>(id)];
  if (fo.unknown > 0) {
    s += static_cast<double>(fo.unknown) * std::pow(FeatureDb::tfidf(db.total_docs(), 0), tau);
  }
  return s;
}

double length_norm(std::size_t n) { return 1.0 + std::log(1.0 + static_cast<double>(n)); }

std::size_t overlap(const IdVector& a, const IdVector& b) {
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

double tactic_score_1(const FeatureDb& db, const Query& fo, const IdVector& fp, double tau) {
  return kernels::intersect_weight(fo.known, fp, db.powered_weights(tau));
}

double tactic_score_2(const FeatureDb& db, const Query& fo, const IdVector& fp, double tau) {
  return tactic_score_1(db, fo, fp, tau) / length_norm(fo.size());
}

double tactic_score_1(const FeatureDb& db, const FeatureSet& fo, const FeatureSet& fp,
                      double tau) {
  double s = 0.0;
  for (const std::string& f : fo) {
    if (!std::binary_search(fp.begin(), fp.end(), f)) continue;
    const int id = db.find_feature(f);
    s += std::pow(FeatureDb::tfidf(db.total_docs(), db.doc_frequency(id)), tau);
  }
  return s;
}

double tactic_score_2(const FeatureDb& db, const FeatureSet& fo, const FeatureSet& fp,
                      double tau) {
  return tactic_score_1(db, fo, fp, tau) / length_norm(fo.size());
}

double self_score(const FeatureDb& db, const Query& fo, int variant, double tau) {
  const double s = self_raw(db, fo, tau);
  return variant == 2 ? s / length_norm(fo.size()) : s;
}

std::vector<ScoredTactic> score_tactics(const FeatureDb& db, const Query& open_goal,
                                        const std::vector<std::string>& candidates,
                                        const ScoreOptions& opts, std::uint64_t* work) {
  std::vector<ScoredTactic> out;
  if (db.size() == 0) return out;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> owner;
  std::vector<std::string> present;
  for (const std::string& c : candidates) {
    const auto& r = db.rows_of(c);
    if (r.empty()) continue;
    if (std::find(present.begin(), present.end(), c) != present.end()) continue;
    for (std::size_t row : r) {
      rows.push_back(row);
      owner.push_back(present.size());
    }
    present.push_back(c);
  }
  std::vector<double> raw;
  const auto& weights = db.powered_weights(opts.tau);
  if (opts.parallel) {
    kernels::score_rows_omp(open_goal.known, db.goal_features(), rows, weights, raw);
  } else {
    kernels::score_rows_serial(open_goal.known, db.goal_features(), rows, weights, raw);
  }
  if (work != nullptr) {
    std::uint64_t w = rows.size();
    for (std::size_t r : rows) w += (db.goal_features()[r].size() + open_goal.known.size()) / 8;
    *work = w;
  }
  const double self = self_raw(db, open_goal, opts.tau);
  std::vector<double> best(present.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double v;
    if (self > 0.0) {
      v = raw[i] / self;
    } else {
      const std::size_t n = open_goal.size();
      v = n == 0 ? 0.0
                 : static_cast<double>(overlap(open_goal.known, db.goal_features()[rows[i]])) /
                       static_cast<double>(n);
    }
    best[owner[i]] = std::max(best[owner[i]], std::min(1.0, v));
  }
  std::vector<std::size_t> order(present.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (best[a] != best[b]) return best[a] > best[b];
    const std::size_t ra = db.rows_of(present[a]).front();
    const std::size_t rb = db.rows_of(present[b]).front();
    if (ra != rb) return ra < rb;
    return present[a] < present[b];
  });
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(ScoredTactic{present[i], best[i]});
  return out;
}

std::vector<std::string> preselect_tactics(const FeatureDb& db, const Query& conjecture,
                                           std::size_t n, double tau) {
  const auto& vecs = db.theorem_vectors();
  std::vector<double> score(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    score[i] = tactic_score_1(db, conjecture, db.theorem_features()[i], tau);
  }
  std::vector<std::size_t> order(vecs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return vecs[a].sequence_index < vecs[b].sequence_index;
  });
  std::vector<std::string> out;
  for (std::size_t i : order) {
    for (const std::string& t : vecs[i].tactics) {
      if (out.size() >= n) return out;
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  }
  return out;
}

std::vector<std::size_t> nearest_goal_vectors(const FeatureDb& db, const Query& fo, std::size_t k,
                                              double tau) {
  std::vector<std::size_t> rows(db.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<double> raw;
  kernels::score_rows_serial(fo.known, db.goal_features(), rows, db.powered_weights(tau), raw);
  std::stable_sort(rows.begin(), rows.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

std::string orthogonalize(const FeatureDb& db, const TacticLibrary& library,
                          const std::string& tactic, const Goal& goal,
                          const std::vector<Goal>& produced, const OrthoOptions& opts) {
  if (db.size() == 0) return tactic;
  const Query q = db.query(goal);
  std::vector<std::string> competitors;
  for (std::size_t row : nearest_goal_vectors(db, q, opts.neighborhood, opts.tau)) {
    const std::string& t = db.goal_vectors()[row].tactic;
    if (std::find(competitors.begin(), competitors.end(), t) == competitors.end()) {
      competitors.push_back(t);
    }
  }
  std::stable_sort(competitors.begin(), competitors.end(),
                   [&](const std::string& a, const std::string& b) {
                     return db.coverage(a) > db.coverage(b);
                   });
  for (const std::string& c : competitors) {
    if (c == tactic) return tactic;
    Tactic t = [&]() -> Tactic {
      try {
        return library.parse(c);
      } catch (const ParseError&) {
        return Tactic(c, [](const Goal&, Budget&) -> TacticOutcome { return Failure{"unparsable"}; });
      }
    }();
    if (t.is_hammer()) continue;
    TacticOutcome o = apply_with_budget(t, goal, opts.tactic_budget, opts.clock);
    if (const auto* s = std::get_if<Subgoals>(&o)) {
      if (goal_sets_equal(s->goals, produced)) return c;
    }
  }
  return tactic;
}

std::string record_invocation(FeatureDb& db, const TacticLibrary& library, const Goal& goal,
                              const std::string& tactic, Origin origin, bool ortho,
                              std::size_t sequence_index, const OrthoOptions& opts) {
  Tactic parsed = library.parse(tactic);
  std::string label = parsed.canonical_string();
  if (ortho) {
    TacticOutcome o = apply_with_budget(parsed, goal, opts.tactic_budget, opts.clock);
    if (const auto* s = std::get_if<Subgoals>(&o)) {
      label = orthogonalize(db, library, label, goal, s->goals, opts);
    }
  }
  db.add_goal_vector(label, features_of_goal(goal, db.options()), origin, sequence_index);
  return label;
}

}  // namespace tacsearch
