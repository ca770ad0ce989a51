#include "omega6/spheres.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace omega6 {

ClassTag merge_tags(const ClassTag& a, const ClassTag& b) {
  ClassTag out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string tag_to_string(const ClassTag& tag) {
  if (tag.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < tag.size(); ++i) {
    if (i) out += "+";
    out += tag[i];
  }
  return out;
}

int rohlin_from_spin_form(const IntersectionForm& q) {
  if (!q.is_even())
    fail(Errc::NotEven, "form has an odd diagonal entry; not a spin presentation");
  const int sigma_q = signature(q.matrix());
  if (sigma_q % 8 != 0)
    fail(Errc::Internal, "even unimodular form with signature " + std::to_string(sigma_q) +
                             " not divisible by 8");
  return ((sigma_q / 8) % 2 + 2) % 2;
}

HomologySphere connected_sum_sphere(const HomologySphere& a, const HomologySphere& b) {
  HomologySphere out;
  out.name = a.name + "#" + b.name;
  if (a.rohlin && b.rohlin) out.rohlin = (*a.rohlin + *b.rohlin) % 2;
  out.class_tag = merge_tags(a.class_tag, b.class_tag);
  return out;
}

SphereRegistry::SphereRegistry() {
  insert({"S3", 0, {}});
  insert({"Poincare", 1, {"Poincare"}});
}

const HomologySphere& SphereRegistry::insert(HomologySphere s) {
  auto [it, fresh] = spheres_.emplace(s.name, std::move(s));
  if (!fresh) fail(Errc::DuplicateName, "sphere '" + it->first + "' already registered");
  return it->second;
}

const HomologySphere& SphereRegistry::register_sphere(const std::string& name,
                                                      std::optional<int> mu, ClassTag tag) {
  if (name.empty()) fail(Errc::DuplicateName, "sphere name must be nonempty");
  std::sort(tag.begin(), tag.end());
  std::unique_lock lock(mutex_);
  return insert({name, mu, std::move(tag)});
}

const HomologySphere& SphereRegistry::register_sphere(const std::string& name,
                                                      std::optional<int> mu, ClassTag tag,
                                                      const IntersectionForm& spin_form) {
  const int certified = rohlin_from_spin_form(spin_form);
  if (mu && *mu != certified) {
    std::ostringstream os;
    os << "declared mu " << *mu << " disagrees with mu " << certified
       << " certified from the bounding form";
    fail(Errc::MuMismatch, os.str());
  }
  return register_sphere(name, certified, std::move(tag));
}

std::optional<HomologySphere> SphereRegistry::find(const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = spheres_.find(name);
  if (it == spheres_.end()) return std::nullopt;
  return it->second;
}

HomologySphere SphereRegistry::resolve(const std::string& name) const {
  if (auto known = find(name)) return *known;
  return {name, std::nullopt, {name}};
}

}  // namespace omega6
