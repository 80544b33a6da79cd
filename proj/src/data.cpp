#include "gmv/data.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "gmv/errors.hpp"
#include "gmv/rng.hpp"

namespace gmv {

namespace {

Eigen::VectorXd unit_gaussian(SeededRng& rng, Eigen::Index d) {
  Eigen::VectorXd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = rng.gaussian();
  const double norm = v.norm();
  if (norm == 0.0) return unit_gaussian(rng, d);  // probability zero, but stay total
  return v / norm;
}

// Map identity -> enrolled column, rejecting duplicates among referenced ids.
std::unordered_map<std::uint32_t, Eigen::Index> id_index(const TemplateMatrix& enrolled) {
  std::unordered_map<std::uint32_t, Eigen::Index> map;
  map.reserve(static_cast<std::size_t>(enrolled.count()));
  for (Eigen::Index j = 0; j < enrolled.count(); ++j) {
    auto [it, inserted] = map.emplace(enrolled.ids[static_cast<std::size_t>(j)], j);
    if (!inserted)
      throw ParameterError("enrolled ids are not unique: id " +
                           std::to_string(enrolled.ids[static_cast<std::size_t>(j)]) +
                           " appears twice");
  }
  return map;
}

}  // namespace

void TemplateMatrix::validate() const {
  if (count() < 1) throw ParameterError("template matrix: need at least one column");
  if (ids.size() != static_cast<std::size_t>(count()))
    throw ParameterError("template matrix: id count does not match column count");
  if (!x.allFinite()) throw ParameterError("template matrix: non-finite entries");
  for (Eigen::Index j = 0; j < count(); ++j) {
    if (std::abs(x.col(j).norm() - 1.0) > 1e-6)
      throw ParameterError("template matrix: column " + std::to_string(j) + " is not unit-norm");
  }
}

Eigen::MatrixXd TemplateMatrix::group_columns(const GroupPartition& partition, int g) const {
  const auto& idx = partition.members[static_cast<std::size_t>(g)];
  Eigen::MatrixXd out(dim(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = x.col(idx[k]);
  return out;
}

int QuerySet::genuine_count() const {
  int n = 0;
  for (const auto& id : identities)
    if (id.has_value()) ++n;
  return n;
}

int QuerySet::impostor_count() const { return static_cast<int>(identities.size()) - genuine_count(); }

void QuerySet::validate() const {
  if (identities.size() != static_cast<std::size_t>(count()) ||
      difficulty.size() != static_cast<std::size_t>(count()))
    throw ParameterError("query set: label count does not match query count");
  if (!queries.allFinite()) throw ParameterError("query set: non-finite entries");
  for (Eigen::Index j = 0; j < count(); ++j)
    if (std::abs(queries.col(j).norm() - 1.0) > 1e-6)
      throw ParameterError("query set: column " + std::to_string(j) + " is not unit-norm");
}

SyntheticData gen_synthetic(int d, int n, double sigma, int impostors, std::uint64_t seed) {
  if (d < 1 || n < 1) throw ParameterError("gen_synthetic: d and N must be positive");
  if (sigma < 0.0) throw ParameterError("gen_synthetic: sigma must be nonnegative");
  if (impostors < 0) throw ParameterError("gen_synthetic: impostor count must be nonnegative");

  SeededRng rng(seed);
  SyntheticData out;

  out.templates.x.resize(d, n);
  out.templates.ids.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.templates.x.col(j) = unit_gaussian(rng, d);
    out.templates.ids[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j);
  }

  const int q = n + impostors;
  out.queries.queries.resize(d, q);
  out.queries.identities.resize(static_cast<std::size_t>(q));
  out.queries.difficulty.assign(static_cast<std::size_t>(q), Difficulty::unsplit);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd noise(d);
    for (int i = 0; i < d; ++i) noise[i] = rng.gaussian();
    Eigen::VectorXd y = out.templates.x.col(j) + sigma * noise;
    const double norm = y.norm();
    out.queries.queries.col(j) = norm > 0.0 ? Eigen::VectorXd(y / norm) : out.templates.x.col(j);
    out.queries.identities[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j);
  }
  for (int j = 0; j < impostors; ++j) {
    out.queries.queries.col(n + j) = unit_gaussian(rng, d);
    out.queries.identities[static_cast<std::size_t>(n + j)] = std::nullopt;
  }
  return out;
}

SplitResult split_queries(const QuerySet& queries, const TemplateMatrix& enrolled,
                          double easy_threshold, double hard_threshold) {
  if (!(0.0 < hard_threshold && hard_threshold < easy_threshold && easy_threshold <= 1.0))
    throw ParameterError("split_queries: need 0 < hard_threshold < easy_threshold <= 1");
  if (queries.dim() != enrolled.dim())
    throw ParameterError("split_queries: query and template dimensions differ");

  const auto index = id_index(enrolled);

  SplitResult out;
  std::vector<Eigen::Index> kept;
  std::vector<Difficulty> tags;
  for (Eigen::Index j = 0; j < queries.count(); ++j) {
    const auto& id = queries.identities[static_cast<std::size_t>(j)];
    if (!id.has_value()) {
      kept.push_back(j);
      tags.push_back(Difficulty::unsplit);
      continue;
    }
    const auto it = index.find(*id);
    if (it == index.end())
      throw ParameterError("split_queries: query references unknown identity " +
                           std::to_string(*id));
    const double cosine = queries.queries.col(j).dot(enrolled.x.col(it->second));
    if (cosine >= easy_threshold) {
      kept.push_back(j);
      tags.push_back(Difficulty::easy);
    } else if (cosine >= hard_threshold) {
      kept.push_back(j);
      tags.push_back(Difficulty::hard);
    } else {
      ++out.dropped;
    }
  }

  out.queries.queries.resize(queries.dim(), static_cast<Eigen::Index>(kept.size()));
  out.queries.identities.resize(kept.size());
  out.queries.difficulty.resize(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    out.queries.queries.col(static_cast<Eigen::Index>(k)) = queries.queries.col(kept[k]);
    out.queries.identities[k] = queries.identities[static_cast<std::size_t>(kept[k])];
    out.queries.difficulty[k] = tags[k];
  }
  return out;
}

QuerySet filter_queries(const QuerySet& queries, Difficulty keep) {
  if (keep == Difficulty::unsplit) return queries;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < queries.count(); ++j) {
    const bool impostor = !queries.identities[static_cast<std::size_t>(j)].has_value();
    if (impostor || queries.difficulty[static_cast<std::size_t>(j)] == keep) kept.push_back(j);
  }
  QuerySet out;
  out.queries.resize(queries.dim(), static_cast<Eigen::Index>(kept.size()));
  out.identities.resize(kept.size());
  out.difficulty.resize(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    out.queries.col(static_cast<Eigen::Index>(k)) = queries.queries.col(kept[k]);
    out.identities[k] = queries.identities[static_cast<std::size_t>(kept[k])];
    out.difficulty[k] = queries.difficulty[static_cast<std::size_t>(kept[k])];
  }
  return out;
}

}  // namespace gmv
