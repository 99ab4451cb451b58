#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/linalg.hpp"
#include "equiloc/rational.hpp"

namespace equiloc {

/// The constraint <x, normal> <= offset with a primitive integer normal.
struct HalfSpace {
    LatticeVector normal;
    Rational offset;
};

namespace detail {

struct VertexData {
    std::vector<RationalVector> vertices;           // sorted lexicographically
    std::vector<std::vector<std::size_t>> active;   // facet indices per vertex
    std::vector<std::vector<LatticeVector>> frames; // edge directions per vertex
};

inline bool lex_less(const RationalVector& a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            return true;
        if (a[i] > b[i])
            return false;
    }
    return false;
}

/// Brute-force vertex enumeration over n-subsets of facets with exact linear
/// solves, followed by simplicity, boundedness and frame computation.
/// Intended scale is n <= 5 with a couple dozen facets.
inline VertexData enumerate(std::size_t n, const std::vector<HalfSpace>& hs) {
    const std::size_t m = hs.size();
    if (m < n)
        throw Unbounded("fewer facets than the ambient dimension");

    std::vector<RationalVector> found;
    std::vector<std::size_t> subset(n);
    // iterate over all n-subsets of {0..m-1}
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    auto advance = [&]() -> bool {
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    while (true) {
        RationalMatrix A(n);
        RationalVector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (auto x : hs[idx[i]].normal)
                A[i].push_back(Rational(x));
            b[i] = hs[idx[i]].offset;
        }
        if (auto x = solve_linear(std::move(A), std::move(b))) {
            bool inside = true;
            for (const auto& h : hs) {
                if (dot(*x, h.normal) > h.offset) {
                    inside = false;
                    break;
                }
            }
            if (inside)
                found.push_back(std::move(*x));
        }
        if (!advance())
            break;
    }

    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty())
        throw Degenerate("constraint system has no vertices");

    VertexData data;
    data.vertices = std::move(found);
    for (const auto& v : data.vertices) {
        std::vector<std::size_t> act;
        for (std::size_t i = 0; i < m; ++i)
            if (dot(v, hs[i].normal) == hs[i].offset)
                act.push_back(i);
        if (act.size() != n)
            throw Degenerate(std::to_string(act.size()) +
                             " facets through a vertex of a " +
                             std::to_string(n) + "-polytope");
        data.active.push_back(std::move(act));
    }

    // Edge directions: dropping the j-th active constraint at a vertex gives
    // the primitive direction d with <d, v_i> = -delta_ij, pointing along the
    // edge away from the vertex into the polytope.
    for (std::size_t vi = 0; vi < data.vertices.size(); ++vi) {
        RationalMatrix V(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto x : hs[data.active[vi][i]].normal)
                V[i].push_back(Rational(x));
        auto Vinv = inverse(V);
        if (!Vinv)
            throw Degenerate("active normals at a vertex are linearly dependent");
        std::vector<LatticeVector> frame;
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector col(n);
            for (std::size_t i = 0; i < n; ++i)
                col[i] = -(*Vinv)[i][j];
            frame.push_back(primitive_direction(col));
        }
        data.frames.push_back(std::move(frame));
    }

    // Bounded iff every edge ray eventually violates some facet.
    for (std::size_t vi = 0; vi < data.vertices.size(); ++vi) {
        for (const auto& d : data.frames[vi]) {
            bool blocked = false;
            for (const auto& h : hs)
                if (dot(d, h.normal) > 0) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                throw Unbounded("edge ray escapes every facet");
        }
    }

    if (affine_rank(data.vertices) < n)
        throw Degenerate("polytope is not full-dimensional");
    return data;
}

} // namespace detail

/// Vertices of the polytope cut out by the half-spaces, sorted
/// lexicographically. Throws Unbounded or Degenerate as appropriate.
inline std::vector<RationalVector>
enumerate_vertices(std::size_t n, const std::vector<HalfSpace>& halfspaces) {
    return detail::enumerate(n, halfspaces).vertices;
}

/// A Delzant moment polytope in half-space description. Vertices, their
/// active facet sets, and the primitive edge frames are derived eagerly at
/// construction; the value is immutable afterwards.
///
/// Construction rejects non-primitive normals, unbounded or empty systems,
/// and non-simple vertices. The unimodularity of the edge frames (the
/// Delzant condition proper) is checked separately by check_delzant so that
/// violating inputs can be reported rather than refused.
class DelzantPolytope {
public:
    static DelzantPolytope from_halfspaces(std::size_t n,
                                           std::vector<HalfSpace> halfspaces) {
        if (n == 0)
            throw InvalidArgument("ambient dimension must be positive");
        for (const auto& h : halfspaces) {
            if (h.normal.size() != n)
                throw InvalidArgument("normal length does not match dimension");
            if (is_zero_vector(h.normal))
                throw InvalidArgument("zero normal vector");
            if (content(h.normal) != 1)
                throw InvalidArgument("non-primitive normal " + fmt(h.normal));
        }
        DelzantPolytope P;
        P.n_ = n;
        P.hs_ = std::move(halfspaces);
        auto data = detail::enumerate(n, P.hs_);
        P.vertices_ = std::move(data.vertices);
        P.active_ = std::move(data.active);
        P.frames_ = std::move(data.frames);
        P.delzant_ = true;
        for (const auto& frame : P.frames_) {
            Rational d = det_lattice(frame);
            if (d != 1 && d != -1)
                P.delzant_ = false;
        }
        return P;
    }

    /// Whether every vertex frame is a lattice basis. Construction accepts
    /// simple non-Delzant polytopes so check_delzant can report on them, but
    /// the localization formulas are only valid when this holds.
    bool is_delzant() const { return delzant_; }

    std::size_t dimension() const { return n_; }
    const std::vector<HalfSpace>& halfspaces() const { return hs_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const std::vector<std::vector<std::size_t>>& active_sets() const {
        return active_;
    }
    const std::vector<std::vector<LatticeVector>>& vertex_frames() const {
        return frames_;
    }

    DelzantPolytope translated(const RationalVector& t) const {
        std::vector<HalfSpace> hs = hs_;
        for (auto& h : hs)
            h.offset += dot(t, h.normal);
        return from_halfspaces(n_, std::move(hs));
    }

    friend bool operator==(const DelzantPolytope& a, const DelzantPolytope& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }

private:
    static std::string fmt(const LatticeVector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    }

    std::size_t n_ = 0;
    bool delzant_ = false;
    std::vector<HalfSpace> hs_;
    std::vector<RationalVector> vertices_;
    std::vector<std::vector<std::size_t>> active_;
    std::vector<std::vector<LatticeVector>> frames_;
};

// ---------------------------------------------------------------------------
// Model builders

/// Standard simplex scaled by sigma: x_j >= 0, sum x_j <= sigma.
inline DelzantPolytope build_simplex(std::size_t n, const Rational& sigma) {
    if (sigma <= 0)
        throw InfeasibleParameters("sigma must be positive");
    std::vector<HalfSpace> hs;
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector v(n, 0);
        v[j] = -1;
        hs.push_back({std::move(v), Rational(0)});
    }
    hs.push_back({LatticeVector(n, 1), sigma});
    return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

/// Projectivized line-bundle polytope: facets -x_j <= 0 (j = 1..n),
/// x_1 + ... + x_{n-1} <= sigma, and <x, e_n - sum a_i e_i> <= tau,
/// requiring tau + a_i sigma > 0 for every i.
inline DelzantPolytope build_pl_bundle(const std::vector<std::int64_t>& a,
                                       const Rational& sigma,
                                       const Rational& tau) {
    const std::size_t n = a.size() + 1;
    if (sigma <= 0 || tau <= 0)
        throw InfeasibleParameters("sigma and tau must be positive");
    for (auto ai : a)
        if (tau + Rational(ai) * sigma <= 0)
            throw InfeasibleParameters("tau + a_i * sigma must be positive");
    std::vector<HalfSpace> hs;
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector v(n, 0);
        v[j] = -1;
        hs.push_back({std::move(v), Rational(0)});
    }
    LatticeVector base(n, 1);
    base[n - 1] = 0;
    hs.push_back({std::move(base), sigma});
    LatticeVector fiber(n, 0);
    fiber[n - 1] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
        fiber[i] = -a[i];
    hs.push_back({std::move(fiber), tau});
    return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

/// Hirzebruch trapezoid: the n = 2 bundle polytope with a = -k, i.e. the
/// vertices (0,0), (0,tau), (sigma,0), (sigma,tau-k*sigma).
inline DelzantPolytope build_hirzebruch(std::int64_t k, const Rational& sigma,
                                        const Rational& tau) {
    return build_pl_bundle({-k}, sigma, tau);
}

/// Rectangle [0,sigma] x [0,tau] (two-sphere product).
inline DelzantPolytope build_product_of_segments(const Rational& sigma,
                                                 const Rational& tau) {
    return build_pl_bundle({0}, sigma, tau);
}

// ---------------------------------------------------------------------------
// Derived geometry

struct DelzantReport {
    bool pass = true;
    std::vector<std::string> violations;
};

/// Verifies the Delzant condition: at each vertex the primitive edge frame
/// must be a lattice basis (determinant +-1). Violations are reported, not
/// thrown.
inline DelzantReport check_delzant(const DelzantPolytope& P) {
    DelzantReport report;
    const auto& frames = P.vertex_frames();
    for (std::size_t vi = 0; vi < frames.size(); ++vi) {
        Rational d = det_lattice(frames[vi]);
        if (d != 1 && d != -1) {
            report.pass = false;
            report.violations.push_back(
                "vertex " + to_string(P.vertices()[vi]) +
                ": edge frame determinant " + to_string(d));
        }
    }
    return report;
}

namespace detail {

/// Pulling triangulation: cones each face over its lexicographically first
/// vertex, recursing on the subfaces that miss the apex. Returns n-simplices
/// as vertex index tuples.
inline void triangulate_face(const DelzantPolytope& P,
                             const std::vector<std::size_t>& face,
                             std::size_t dim,
                             std::vector<std::vector<std::size_t>>& out) {
    if (dim == 1) {
        if (face.size() != 2)
            throw Degenerate("edge with " + std::to_string(face.size()) +
                             " vertices");
        out.push_back(face);
        return;
    }
    const std::size_t apex = face.front(); // vertices are sorted, so lex-min
    const auto& hs = P.halfspaces();
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t f = 0; f < hs.size(); ++f) {
        std::vector<std::size_t> sub;
        for (auto vi : face)
            if (dot(P.vertices()[vi], hs[f].normal) == hs[f].offset)
                sub.push_back(vi);
        if (sub.size() == face.size() || sub.empty())
            continue; // facet contains the whole face, or misses it
        if (std::find(sub.begin(), sub.end(), apex) != sub.end())
            continue;
        std::vector<RationalVector> pts;
        for (auto vi : sub)
            pts.push_back(P.vertices()[vi]);
        if (affine_rank(pts) != dim - 1)
            continue;
        if (!seen.insert(sub).second)
            continue;
        std::vector<std::vector<std::size_t>> sub_simplices;
        triangulate_face(P, sub, dim - 1, sub_simplices);
        for (auto& s : sub_simplices) {
            std::vector<std::size_t> cone;
            cone.push_back(apex);
            cone.insert(cone.end(), s.begin(), s.end());
            out.push_back(std::move(cone));
        }
    }
}

inline std::vector<std::vector<std::size_t>>
triangulate(const DelzantPolytope& P) {
    std::vector<std::size_t> all(P.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::vector<std::size_t>> simplices;
    if (P.dimension() == 0)
        throw InvalidArgument("zero-dimensional polytope");
    triangulate_face(P, all, P.dimension(), simplices);
    return simplices;
}

} // namespace detail

/// Exact Euclidean volume via the pulling (fan) triangulation.
inline Rational volume(const DelzantPolytope& P) {
    const std::size_t n = P.dimension();
    Rational total(0);
    for (const auto& s : detail::triangulate(P)) {
        RationalMatrix edges(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                edges[i - 1].push_back(P.vertices()[s[i]][k] -
                                       P.vertices()[s[0]][k]);
        Rational d = det(edges);
        if (d < 0)
            d = -d;
        total += d / factorial(static_cast<int>(n));
    }
    return total;
}

/// Exact center of mass: volume-weighted average of the simplex centroids of
/// the fan triangulation.
inline RationalVector center_of_mass(const DelzantPolytope& P) {
    const std::size_t n = P.dimension();
    Rational total(0);
    RationalVector weighted(n, Rational(0));
    for (const auto& s : detail::triangulate(P)) {
        RationalMatrix edges(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                edges[i - 1].push_back(P.vertices()[s[i]][k] -
                                       P.vertices()[s[0]][k]);
        Rational d = det(edges);
        if (d < 0)
            d = -d;
        Rational vol = d / factorial(static_cast<int>(n));
        total += vol;
        for (std::size_t k = 0; k < n; ++k) {
            Rational c(0);
            for (auto vi : s)
                c += P.vertices()[vi][k];
            weighted[k] += vol * c / Rational(static_cast<int>(n + 1));
        }
    }
    if (total == 0)
        throw Degenerate("zero-volume polytope");
    for (auto& c : weighted)
        c /= total;
    return weighted;
}

/// Translates the polytope so its center of mass is the origin.
inline DelzantPolytope recenter(const DelzantPolytope& P) {
    RationalVector cm = center_of_mass(P);
    for (auto& c : cm)
        c = -c;
    return P.translated(cm);
}

/// Type of the circle action generated by X: the maximal dimension of a face
/// on which <., X> is constant, i.e. whose edge directions are all
/// orthogonal to X. Zero means no edge direction is orthogonal to X, so the
/// fixed points are exactly the vertices. In a simple polytope any k edges
/// at a vertex span a k-face, so it suffices to count orthogonal frame
/// directions vertex by vertex.
inline int face_type(const DelzantPolytope& P, const LatticeVector& X) {
    if (X.size() != P.dimension())
        throw InvalidArgument("vector length does not match dimension");
    if (is_zero_vector(X))
        throw ZeroVector("face type of the zero vector");
    int s = 0;
    for (const auto& frame : P.vertex_frames()) {
        int here = 0;
        for (const auto& d : frame)
            if (dot(d, X) == 0)
                ++here;
        s = std::max(s, here);
    }
    return s;
}

/// Image of the polytope under an integer linear map (rows acting on column
/// vectors). The map must be unimodular for the result to stay Delzant.
inline DelzantPolytope apply_unimodular(const DelzantPolytope& P,
                                        const std::vector<LatticeVector>& U) {
    const std::size_t n = P.dimension();
    RationalMatrix M(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto x : U[i])
            M[i].push_back(Rational(x));
    auto Minv = inverse(M);
    if (!Minv)
        throw InvalidArgument("singular matrix");
    std::vector<HalfSpace> hs;
    for (const auto& h : P.halfspaces()) {
        // normal transforms by the inverse transpose
        RationalVector w(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w[i] += (*Minv)[j][i] * Rational(h.normal[j]);
        LatticeVector nv = primitive_direction(w);
        // a unimodular map keeps integer normals integer; reject otherwise
        for (std::size_t i = 0; i < n; ++i)
            if (Rational(nv[i]) != w[i])
                throw InvalidArgument("matrix is not unimodular");
        hs.push_back({std::move(nv), h.offset});
    }
    return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

} // namespace equiloc
