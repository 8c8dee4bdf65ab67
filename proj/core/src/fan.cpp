#include "kfan/fan.hpp"

#include "kfan/rational_lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kfan {

namespace {

bool cone_order(const Cone& a, const Cone& b)
{
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return a.rays() < b.rays();
}

void add_faces(const Cone& c, std::set<std::vector<RayId>>& out)
{
    const auto& r = c.rays();
    const std::size_t k = r.size();
    if (k >= 8 * sizeof(std::size_t))
        throw std::invalid_argument("cone dimension too large");
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<RayId> face;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i))
                face.push_back(r[i]);
        out.insert(std::move(face));
    }
}

} // namespace

Cone::Cone(std::vector<RayId> rays) : rays_(std::move(rays))
{
    std::sort(rays_.begin(), rays_.end());
    if (std::adjacent_find(rays_.begin(), rays_.end()) != rays_.end())
        throw std::invalid_argument("cone lists a ray twice");
}

bool Cone::contains(RayId r) const
{
    return std::binary_search(rays_.begin(), rays_.end(), r);
}

bool Cone::is_face_of(const Cone& other) const
{
    return std::includes(other.rays_.begin(), other.rays_.end(), rays_.begin(), rays_.end());
}

std::string to_string(const Cone& c)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
        if (i)
            os << ',';
        os << c.rays()[i];
    }
    os << '}';
    return os.str();
}

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<Cone> cones, std::string name)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(cones)), name_(std::move(name)),
      cache_(std::make_shared<Cache>())
{
    std::sort(cones_.begin(), cones_.end(), cone_order);
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
    for (const auto& c : cones_) {
        bool maximal = std::none_of(cones_.begin(), cones_.end(), [&](const Cone& d) {
            return d.dim() > c.dim() && c.is_face_of(d);
        });
        if (maximal)
            maximal_.push_back(c);
    }
}

Fan Fan::from_maximal_cones(std::size_t rank, std::vector<IntVector> rays, const std::vector<Cone>& maximal,
                            std::string name)
{
    std::set<std::vector<RayId>> all{{}};
    for (const auto& c : maximal)
        add_faces(c, all);
    std::vector<Cone> cones;
    cones.reserve(all.size());
    for (const auto& r : all)
        cones.emplace_back(r);
    return Fan(rank, std::move(rays), std::move(cones), std::move(name));
}

std::size_t Fan::dimension() const
{
    std::size_t d = 0;
    for (const auto& c : maximal_)
        d = std::max(d, c.dim());
    return d;
}

bool Fan::contains(const Cone& c) const
{
    return std::binary_search(cones_.begin(), cones_.end(), c, cone_order);
}

std::optional<RayId> Fan::find_ray(const IntVector& generator) const
{
    for (RayId r = 0; r < rays_.size(); ++r)
        if (rays_[r] == generator)
            return r;
    return std::nullopt;
}

IntMatrix Fan::generator_matrix(const Cone& c) const
{
    std::vector<IntVector> cols;
    cols.reserve(c.dim());
    for (RayId r : c.rays())
        cols.push_back(rays_.at(r));
    return IntMatrix::from_columns(cols, rank_);
}

const IntMatrix& Fan::dual_rows(const Cone& c) const
{
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->dual_rows.find(c);
    if (it != cache_->dual_rows.end())
        return it->second;
    std::vector<IntVector> gens;
    for (RayId r : c.rays())
        gens.push_back(rays_.at(r));
    auto completion = complete_basis(gens, rank_);
    auto rows = completion.inverse.select_rows(0, c.dim());
    return cache_->dual_rows.emplace(c, std::move(rows)).first->second;
}

FanPtr share(Fan fan)
{
    return std::make_shared<const Fan>(std::move(fan));
}

namespace {

bool rays_in_range(const Fan& fan, const Cone& c)
{
    return std::all_of(c.rays().begin(), c.rays().end(), [&](RayId r) { return r < fan.num_rays(); });
}

/// m with <m,u> >= 1 on a\b, <= -1 on b\a and = 0 on the common rays.
bool has_separating_functional(const Fan& fan, const Cone& a, const Cone& b)
{
    std::vector<LinearConstraint> cons;
    for (RayId r : a.rays())
        cons.push_back({fan.ray(r), b.contains(r) ? Relation::Equal : Relation::GreaterEqual,
                        b.contains(r) ? 0 : 1});
    for (RayId r : b.rays())
        if (!a.contains(r))
            cons.push_back({fan.ray(r), Relation::LessEqual, -1});
    return find_feasible_point(cons, fan.rank()).has_value();
}

} // namespace

std::vector<Violation> validate(const Fan& fan)
{
    std::vector<Violation> out;
    std::vector<bool> ray_ok(fan.num_rays(), true);
    for (RayId r = 0; r < fan.num_rays(); ++r) {
        const auto& u = fan.ray(r);
        std::string msg;
        if (u.size() != fan.rank())
            msg = "ray " + std::to_string(r) + " has length " + std::to_string(u.size()) + ", expected " +
                  std::to_string(fan.rank());
        else if (content(u) == 0)
            msg = "ray " + std::to_string(r) + " is zero";
        else if (!is_primitive(u))
            msg = "ray " + std::to_string(r) + " not primitive";
        else
            for (RayId s = 0; s < r; ++s)
                if (fan.ray(s) == u) {
                    msg = "ray " + std::to_string(r) + " duplicates ray " + std::to_string(s);
                    break;
                }
        if (!msg.empty()) {
            ray_ok[r] = false;
            out.push_back({{}, msg});
        }
    }

    if (!fan.contains(Cone{}))
        out.push_back({{Cone{}}, "zero cone missing"});

    std::vector<Cone> good;
    for (const auto& c : fan.cones()) {
        if (!rays_in_range(fan, c)) {
            out.push_back({{c}, "cone " + to_string(c) + " references an unknown ray"});
            continue;
        }
        if (std::any_of(c.rays().begin(), c.rays().end(), [&](RayId r) { return !ray_ok[r]; }))
            continue;
        for (std::size_t i = 0; i < c.dim(); ++i) {
            auto rays = c.rays();
            rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
            Cone facet(rays);
            if (!fan.contains(facet))
                out.push_back({{c, facet}, "cone " + to_string(c) + " missing face " + to_string(facet)});
        }
        auto snf = smith_normal_form(fan.generator_matrix(c));
        if (snf.rank() < c.dim()) {
            out.push_back({{c}, "cone " + to_string(c) + ": rays not linearly independent"});
            continue;
        }
        auto factors = snf.invariant_factors();
        if (std::any_of(factors.begin(), factors.end(), [](const Integer& d) { return d != 1; })) {
            out.push_back({{c}, "cone " + to_string(c) + " not unimodular"});
            continue;
        }
        good.push_back(c);
    }

    // checking maximal pairs suffices: faces of properly meeting simplicial
    // cones meet properly
    std::vector<Cone> maximal;
    for (const auto& c : fan.maximal_cones())
        if (std::find(good.begin(), good.end(), c) != good.end())
            maximal.push_back(c);
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (!has_separating_functional(fan, maximal[i], maximal[j]))
                out.push_back({{maximal[i], maximal[j]}, "cones " + to_string(maximal[i]) + " and " +
                                                             to_string(maximal[j]) +
                                                             " do not meet in a common face"});
    return out;
}

namespace {

void require_cone(const Fan& fan, const Cone& sigma)
{
    if (!fan.contains(sigma))
        throw std::invalid_argument("cone " + to_string(sigma) + " is not in the fan");
}

} // namespace

Fan neighborhood(const Fan& fan, const Cone& sigma)
{
    require_cone(fan, sigma);
    std::vector<Cone> tops;
    for (const auto& c : fan.maximal_cones())
        if (sigma.is_face_of(c))
            tops.push_back(c);
    std::set<RayId> used;
    for (const auto& c : tops)
        used.insert(c.rays().begin(), c.rays().end());
    std::vector<RayId> old_of(used.begin(), used.end());
    std::map<RayId, RayId> new_of;
    std::vector<IntVector> rays;
    for (RayId r : old_of) {
        new_of[r] = rays.size();
        rays.push_back(fan.ray(r));
    }
    std::vector<Cone> mapped;
    for (const auto& c : tops) {
        std::vector<RayId> ids;
        for (RayId r : c.rays())
            ids.push_back(new_of.at(r));
        mapped.emplace_back(std::move(ids));
    }
    return Fan::from_maximal_cones(fan.rank(), std::move(rays), mapped, fan.name());
}

StarFan star_fan(const Fan& fan, const Cone& sigma)
{
    require_cone(fan, sigma);
    std::vector<IntVector> gens;
    for (RayId r : sigma.rays())
        gens.push_back(fan.ray(r));
    IntMatrix p = quotient_projection(gens, fan.rank());

    std::map<RayId, RayId> star_id;
    std::vector<IntVector> rays;
    std::vector<Cone> tops;
    for (const auto& c : fan.maximal_cones()) {
        if (!sigma.is_face_of(c))
            continue;
        std::vector<RayId> ids;
        for (RayId r : c.rays()) {
            if (sigma.contains(r))
                continue;
            auto it = star_id.find(r);
            if (it == star_id.end()) {
                IntVector image = p * std::span<const Integer>(fan.ray(r));
                if (!is_primitive(image))
                    throw std::logic_error("star_fan: projected ray is not primitive");
                it = star_id.emplace(r, rays.size()).first;
                rays.push_back(std::move(image));
            }
            ids.push_back(it->second);
        }
        tops.emplace_back(std::move(ids));
    }
    // keep the star's rays in the order of the original rays
    std::vector<RayId> order(rays.size());
    {
        std::vector<std::pair<RayId, RayId>> by_original(star_id.begin(), star_id.end());
        for (std::size_t i = 0; i < by_original.size(); ++i)
            order[by_original[i].second] = i;
    }
    std::vector<IntVector> sorted_rays(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
        sorted_rays[order[i]] = rays[i];
    for (auto& c : tops) {
        std::vector<RayId> ids;
        for (RayId r : c.rays())
            ids.push_back(order[r]);
        c = Cone(std::move(ids));
    }
    return {Fan::from_maximal_cones(fan.rank() - sigma.dim(), std::move(sorted_rays), tops), std::move(p)};
}

bool is_complete(const Fan& fan)
{
    if (fan.rank() == 0)
        return fan.contains(Cone{});
    const auto& tops = fan.maximal_cones();
    if (tops.empty())
        return false;
    for (const auto& c : tops)
        if (c.dim() != fan.rank())
            return false;

    std::map<Cone, std::vector<std::size_t>> ridge_owners;
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t k = 0; k < tops[i].dim(); ++k) {
            auto rays = tops[i].rays();
            rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(k));
            ridge_owners[Cone(rays)].push_back(i);
        }
    for (const auto& c : fan.cones())
        if (c.dim() + 1 == fan.rank() && !ridge_owners.count(c))
            return false;

    std::vector<std::size_t> parent(tops.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [ridge, owners] : ridge_owners) {
        if (owners.size() != 2)
            return false;
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

Fan projective_space(std::size_t n)
{
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(IntVector(n, Integer(-1)));
    std::vector<Cone> tops;
    for (RayId skip = 0; skip <= n; ++skip) {
        std::vector<RayId> ids;
        for (RayId r = 0; r <= n; ++r)
            if (r != skip)
                ids.push_back(r);
        tops.emplace_back(std::move(ids));
    }
    return Fan::from_maximal_cones(n, std::move(rays), tops, "p" + std::to_string(n));
}

Fan affine_space(std::size_t n)
{
    std::vector<IntVector> rays;
    std::vector<RayId> ids;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        rays.push_back(std::move(e));
        ids.push_back(i);
    }
    return Fan::from_maximal_cones(n, std::move(rays), {Cone(ids)}, "a" + std::to_string(n));
}

Fan product(const Fan& f1, const Fan& f2)
{
    const std::size_t n = f1.rank() + f2.rank();
    std::vector<IntVector> rays;
    for (const auto& u : f1.rays()) {
        IntVector v(u);
        v.resize(n);
        rays.push_back(std::move(v));
    }
    for (const auto& u : f2.rays()) {
        IntVector v(f1.rank());
        v.insert(v.end(), u.begin(), u.end());
        rays.push_back(std::move(v));
    }
    std::vector<Cone> tops;
    for (const auto& a : f1.maximal_cones())
        for (const auto& b : f2.maximal_cones()) {
            std::vector<RayId> ids = a.rays();
            for (RayId r : b.rays())
                ids.push_back(f1.num_rays() + r);
            tops.emplace_back(std::move(ids));
        }
    std::string name = f1.name().empty() || f2.name().empty() ? std::string{} : f1.name() + "x" + f2.name();
    return Fan::from_maximal_cones(n, std::move(rays), tops, name);
}

Fan hirzebruch(long a)
{
    std::vector<IntVector> rays{{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    std::vector<Cone> tops{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return Fan::from_maximal_cones(2, std::move(rays), tops, "hirzebruch:" + std::to_string(a));
}

Fan star_subdivision(const Fan& fan, const Cone& sigma)
{
    require_cone(fan, sigma);
    if (sigma.dim() < 2)
        throw std::invalid_argument("star_subdivision needs a cone of dimension at least 2");
    IntVector u(fan.rank());
    for (RayId r : sigma.rays())
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] += fan.ray(r)[i];
    auto rays = fan.rays();
    const RayId added = rays.size();
    rays.push_back(std::move(u));

    std::vector<Cone> tops;
    for (const auto& c : fan.maximal_cones()) {
        if (!sigma.is_face_of(c)) {
            tops.push_back(c);
            continue;
        }
        for (RayId drop : sigma.rays()) {
            std::vector<RayId> ids;
            for (RayId r : c.rays())
                if (r != drop)
                    ids.push_back(r);
            ids.push_back(added);
            tops.emplace_back(std::move(ids));
        }
    }
    std::string name = fan.name().empty() ? std::string{} : fan.name() + "/" + to_string(sigma);
    return Fan::from_maximal_cones(fan.rank(), std::move(rays), tops, name);
}

bool same_fan(const Fan& a, const Fan& b)
{
    if (a.rank() != b.rank() || a.num_rays() != b.num_rays() || a.cones().size() != b.cones().size())
        return false;
    std::vector<RayId> to_b(a.num_rays());
    for (RayId r = 0; r < a.num_rays(); ++r) {
        auto s = b.find_ray(a.ray(r));
        if (!s)
            return false;
        to_b[r] = *s;
    }
    for (const auto& c : a.cones()) {
        std::vector<RayId> ids;
        for (RayId r : c.rays())
            ids.push_back(to_b[r]);
        if (!b.contains(Cone(ids)))
            return false;
    }
    return true;
}

RationalVector to_rational(const RationalPoint& p)
{
    if (p.denominator <= 0)
        throw std::invalid_argument("rational point needs a positive denominator");
    RationalVector out;
    for (const auto& x : p.numerators) {
        Rational q(x, p.denominator);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::optional<RationalVector> cone_coordinates(const Fan& fan, const Cone& c, const RationalPoint& point)
{
    if (point.numerators.size() != fan.rank())
        throw std::invalid_argument("point has the wrong dimension");
    auto target = to_rational(point);
    return solve_rational_system(fan.generator_matrix(c), target);
}

std::optional<Cone> find_containing_cone(const Fan& fan, const RationalPoint& point)
{
    for (const auto& c : fan.cones()) {
        auto coords = cone_coordinates(fan, c, point);
        if (!coords)
            continue;
        if (std::all_of(coords->begin(), coords->end(), [](const Rational& q) { return q > 0; }))
            return c;
    }
    return std::nullopt;
}

} // namespace kfan
