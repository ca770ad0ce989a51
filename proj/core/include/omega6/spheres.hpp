#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "omega6/lattice.hpp"

namespace omega6 {

/// Opaque homology-cobordism class: a sorted multiset of generator labels.
/// The empty multiset is the distinguished zero tag (the class of S^3).
/// Equal tags mean the same class; unequal tags are *not comparable* --
/// the library never claims two distinct labels are different classes.
using ClassTag = std::vector<std::string>;

ClassTag merge_tags(const ClassTag& a, const ClassTag& b);
std::string tag_to_string(const ClassTag& tag);

/// A labeled integral homology 3-sphere. rohlin is empty until certified
/// (supplied at registration or derived from an even bounding form).
struct HomologySphere {
  std::string name;
  std::optional<int> rohlin;
  ClassTag class_tag;

  bool operator==(const HomologySphere&) const = default;
};

/// Rohlin invariant read off a spin bounding 4-manifold: sigma/8 mod 2.
/// The form must be even (all diagonal entries even); the signature of an
/// even unimodular form is divisible by 8, asserted. Throws NotEven.
int rohlin_from_spin_form(const IntersectionForm& q);

/// Connected sum: names joined by '#', Rohlin bits add mod 2 (unknown if
/// either side is uncertified), tags merge as multisets.
HomologySphere connected_sum_sphere(const HomologySphere& a, const HomologySphere& b);

/// Registry of named spheres. "S3" (mu 0, zero tag) and "Poincare" (mu 1,
/// its own tag) are builtin. Single writer, concurrent readers.
class SphereRegistry {
 public:
  SphereRegistry();

  /// Stores a sphere; name must be nonempty and unused. Throws DuplicateName.
  const HomologySphere& register_sphere(const std::string& name, std::optional<int> mu,
                                        ClassTag tag);

  /// Same, but certifies mu from an even unimodular bounding form. If an
  /// explicit mu is also given and disagrees, registration fails with
  /// MuMismatch. Throws NotEven for a non-spin form.
  const HomologySphere& register_sphere(const std::string& name, std::optional<int> mu,
                                        ClassTag tag, const IntersectionForm& spin_form);

  std::optional<HomologySphere> find(const std::string& name) const;

  /// Registered sphere, or a placeholder carrying its own opaque tag and no
  /// certified Rohlin bit.
  HomologySphere resolve(const std::string& name) const;

 private:
  const HomologySphere& insert(HomologySphere s);

  mutable std::shared_mutex mutex_;
  std::map<std::string, HomologySphere> spheres_;
};

}  // namespace omega6
