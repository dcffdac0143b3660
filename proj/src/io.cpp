#include "oligo/io.hpp"

#include <limits>

#include "oligo/error.hpp"

namespace oligo
{

Json to_json(BigInt const &value)
{
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Json to_json(std::vector<BigInt> const &values)
{
  Json out = Json::array();
  for (auto const &v : values)
    out.push_back(to_json(v));
  return out;
}

Json to_json(Permutation const &p)
{
  Json out = Json::array();
  for (Point x : p.images())
    out.push_back(x);
  return out;
}

namespace
{

Json generators_json(FiniteGroup const &g)
{
  Json out = Json::array();
  for (auto const &p : g.generators())
    out.push_back(to_json(p));
  return out;
}

[[noreturn]] void schema_error(std::string const &what)
{
  throw ParseError("malformed JSON: " + what, 0);
}

Json const &field(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    schema_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Point> points_from(Json const &j, char const *what)
{
  if (!j.is_array())
    schema_error(std::string(what) + " must be an array");
  std::vector<Point> out;
  for (auto const &x : j) {
    if (!x.is_number_integer())
      schema_error(std::string(what) + " must hold integers");
    out.push_back(x.get<Point>());
  }
  return out;
}

std::vector<Permutation> perms_from(Json const &j, int degree, char const *what)
{
  if (!j.is_array())
    schema_error(std::string(what) + " must be an array");
  std::vector<Permutation> out;
  for (auto const &g : j) {
    auto images = points_from(g, what);
    if (static_cast<int>(images.size()) != degree)
      schema_error(std::string(what) + ": image array of length " +
                   std::to_string(images.size()) + ", expected " + std::to_string(degree));
    try {
      out.emplace_back(std::move(images));
    } catch (DomainError const &e) {
      schema_error(std::string(what) + ": " + e.what());
    }
  }
  return out;
}

} // namespace

Json group_to_json(FiniteGroup const &group)
{
  Json out;
  out["degree"] = group.degree();
  out["generators"] = generators_json(group);
  return out;
}

FiniteGroup group_from_json(Json const &j)
{
  auto const &d = field(j, "degree");
  if (!d.is_number_integer() || d.get<int>() < 0)
    schema_error("degree must be a nonnegative integer");
  int const degree = d.get<int>();
  return FiniteGroup(degree, perms_from(field(j, "generators"), degree, "generators"));
}

Json to_json(DecoratedGroup const &delta)
{
  Json out;
  out["degree"] = delta.degree();
  out["F_generators"] = generators_json(delta.F());
  Json blocks = Json::array();
  for (auto const &b : delta.blocks().blocks())
    blocks.push_back(b);
  out["blocks"] = blocks;
  Json decs = Json::array();
  for (auto const &orbit : delta.block_orbits()) {
    auto const &d = delta.decoration(orbit.front());
    Json e;
    e["block"] = orbit.front();
    e["H_generators"] = generators_json(d.H);
    e["kind"] = std::string(to_string(d.kind));
    decs.push_back(e);
  }
  out["decorations"] = decs;
  return out;
}

DecoratedGroup decorated_from_json(Json const &j)
{
  auto const &d = field(j, "degree");
  if (!d.is_number_integer() || d.get<int>() < 0)
    schema_error("degree must be a nonnegative integer");
  int const degree = d.get<int>();
  FiniteGroup F(degree, perms_from(field(j, "F_generators"), degree, "F_generators"));

  std::vector<std::vector<Point>> blocks;
  auto const &bj = field(j, "blocks");
  if (!bj.is_array())
    schema_error("blocks must be an array");
  for (auto const &b : bj)
    blocks.push_back(points_from(b, "blocks"));
  SetPartition partition;
  try {
    partition = SetPartition(degree, blocks);
  } catch (DomainError const &e) {
    schema_error(std::string("blocks: ") + e.what());
  }
  // SetPartition sorts blocks; "block" indices refer to the input order.
  std::vector<std::size_t> canonical;
  for (auto const &b : blocks) {
    if (b.empty())
      schema_error("empty block");
    canonical.push_back(static_cast<std::size_t>(partition.block_of(b.front())));
  }

  std::vector<std::optional<Decoration>> decs(partition.size());
  auto const &dj = field(j, "decorations");
  if (!dj.is_array())
    schema_error("decorations must be an array");
  for (auto const &e : dj) {
    auto const &bi = field(e, "block");
    if (!bi.is_number_integer() || bi.get<long>() < 0 ||
        bi.get<std::size_t>() >= blocks.size())
      schema_error("decoration block index out of range");
    std::size_t const b = canonical[bi.get<std::size_t>()];
    int const size = static_cast<int>(partition.block(b).size());
    auto const &kj = field(e, "kind");
    if (!kj.is_string())
      schema_error("kind must be a string");
    HHKind const kind = parse_kind(kj.get<std::string>());
    FiniteGroup H(size, perms_from(field(e, "H_generators"), size, "H_generators"));
    decs[b] = Decoration{std::move(H), kind};
  }
  if (!is_block_system(F, partition))
    throw PreconditionError("blocks do not form a block system for F");

  // Spread each given decoration along its F-orbit.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < decs.size(); ++b) {
      if (!decs[b])
        continue;
      for (auto const &f : F.generators()) {
        auto const t = static_cast<std::size_t>(partition.block_of(f(partition.block(b).front())));
        if (decs[t])
          continue;
        decs[t] = Decoration{transport(decs[b]->H, partition.block(b), partition.block(t), f),
                             decs[b]->kind};
        changed = true;
      }
    }
  }
  std::vector<Decoration> out;
  for (std::size_t b = 0; b < decs.size(); ++b) {
    if (!decs[b])
      schema_error("no decoration for block " + std::to_string(b));
    out.push_back(std::move(*decs[b]));
  }
  return DecoratedGroup(std::move(F), std::move(partition), std::move(out));
}

Json to_json(HilbertForm const &form, RationalFunction const &reduced)
{
  Json out;
  out["numerator"] = to_json(form.numerator);
  out["denominator_degrees"] = form.denominator_degrees;
  Json r;
  r["numerator"] = to_json(reduced.numerator().coefficients());
  r["denominator"] = to_json(reduced.denominator().coefficients());
  out["reduced"] = r;
  return out;
}

Json to_json(VerificationReport const &report)
{
  Json out;
  out["k"] = report.k;
  out["n"] = report.n;
  out["series_prefix"] = to_json(report.series_prefix);
  out["oracle_prefix"] = to_json(report.oracle_prefix);
  out["match"] = report.match;
  out["millis"] = report.millis;
  return out;
}

Json to_json(std::vector<Violation> const &violations)
{
  Json out = Json::array();
  for (auto const &v : violations) {
    Json e;
    e["constraint"] = v.constraint;
    e["block"] = v.block;
    e["detail"] = v.detail;
    out.push_back(e);
  }
  return out;
}

Json to_json(std::vector<BlockSystem> const &systems)
{
  Json out = Json::array();
  for (auto const &s : systems)
    out.push_back(s.partition().blocks());
  return out;
}

} // namespace oligo
