#pragma once

// Unimodular simplicial fans: storage, validation, neighborhoods, star fans
// and the standard constructors used as fixtures.

#include "kfan/lattice.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace kfan {

using RayId = std::size_t;

/// A simplicial cone, identified by the strictly increasing ids of its rays.
class Cone {
public:
    Cone() = default;
    Cone(std::vector<RayId> rays);
    Cone(std::initializer_list<RayId> rays) : Cone(std::vector<RayId>(rays)) {}

    const std::vector<RayId>& rays() const { return rays_; }
    std::size_t dim() const { return rays_.size(); }
    bool is_zero() const { return rays_.empty(); }
    bool contains(RayId r) const;
    bool is_face_of(const Cone& other) const;

    auto operator<=>(const Cone&) const = default;

private:
    std::vector<RayId> rays_;
};

std::string to_string(const Cone& c); // "{0,2}"

/// A finite set of cones closed under faces, in a lattice of fixed rank.
/// Construction does not validate; see validate().
class Fan {
public:
    Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<Cone> cones, std::string name = {});

    /// Face closure of the given cones (the zero cone is always included).
    static Fan from_maximal_cones(std::size_t rank, std::vector<IntVector> rays,
                                  const std::vector<Cone>& maximal, std::string name = {});

    std::size_t rank() const { return rank_; }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<IntVector>& rays() const { return rays_; }
    const IntVector& ray(RayId r) const { return rays_.at(r); }
    const std::string& name() const { return name_; }

    /// Sorted by (dimension, ray ids).
    const std::vector<Cone>& cones() const { return cones_; }
    /// Inclusion-maximal cones, in cone order.
    const std::vector<Cone>& maximal_cones() const { return maximal_; }
    std::size_t dimension() const;

    bool contains(const Cone& c) const;
    std::optional<RayId> find_ray(const IntVector& generator) const;
    IntMatrix generator_matrix(const Cone& c) const; // rank x dim, rays as columns

    /// Rows of the inverse of the completed lattice basis for c: the linear
    /// functional with values v on c's rays and 0 on the completion is
    /// sum_i v_i * row_i. Memoized per cone.
    const IntMatrix& dual_rows(const Cone& c) const;

private:
    std::size_t rank_;
    std::vector<IntVector> rays_;
    std::vector<Cone> cones_;
    std::vector<Cone> maximal_;
    std::string name_;

    struct Cache {
        std::mutex mutex;
        std::map<Cone, IntMatrix> dual_rows;
    };
    std::shared_ptr<Cache> cache_;
};

using FanPtr = std::shared_ptr<const Fan>;

FanPtr share(Fan fan);

struct Violation {
    std::vector<Cone> cones;
    std::string message;
};

/// Empty when every fan invariant holds.
std::vector<Violation> validate(const Fan& fan);

/// Cones containing sigma together with all their faces (rays re-indexed,
/// original order kept).
Fan neighborhood(const Fan& fan, const Cone& sigma);

/// The star of sigma in N / (N cap Span sigma) and the quotient map.
struct StarFan {
    Fan fan;
    IntMatrix projection;
};

StarFan star_fan(const Fan& fan, const Cone& sigma);

bool is_complete(const Fan& fan);

Fan projective_space(std::size_t n);
Fan affine_space(std::size_t n);
Fan product(const Fan& f1, const Fan& f2);
Fan hirzebruch(long a);
/// Adds the ray sum_{rho in sigma} u_rho and subdivides the star of sigma.
Fan star_subdivision(const Fan& fan, const Cone& sigma);

/// Same rays and cones up to a permutation of the ray list.
bool same_fan(const Fan& a, const Fan& b);

struct RationalPoint {
    IntVector numerators;
    Integer denominator = 1;
};

RationalVector to_rational(const RationalPoint& p);

/// The unique cone whose relative interior contains the point.
std::optional<Cone> find_containing_cone(const Fan& fan, const RationalPoint& point);

/// Coordinates of the point in the ray basis of c, if it lies in Span(c).
std::optional<RationalVector> cone_coordinates(const Fan& fan, const Cone& c, const RationalPoint& point);

} // namespace kfan
