#ifndef CHROMCAT_SUBRING_HPP
#define CHROMCAT_SUBRING_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chromcat/category.hpp"
#include "chromcat/elemab.hpp"
#include "chromcat/invariants.hpp"
#include "chromcat/poly.hpp"

namespace chromcat {

/// A subring of H*(BG; F_2) given by Weyl-invariant polynomial generators in
/// H*(BP) = F_2[x_1..x_r], where P is an elementary abelian Sylow 2-subgroup.
/// Variable x_i is dual to the i-th basis element of P.
struct SubringPresentation {
    SubgroupPtr sylow;
    LinearAction weyl;
    std::vector<PolyFp> generators;
};

/// The Weyl group N_G(P)/C_G(P) acting on H*(BP): conjugation by g with
/// matrix C acts on variables by the transpose of C.
inline LinearAction weyl_action(const ElemAbelian& P)
{
    const FiniteGroup& G = P.group();
    std::set<FpMatrix> mats;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (auto m = conjugation_matrix(P, P, GroupElem{i})) {
            mats.insert(m->transpose());
        }
    }
    mats.erase(FpMatrix::identity(P.prime(), P.rank()));
    return LinearAction(P.prime(), P.rank(), std::vector<FpMatrix>(mats.begin(), mats.end()));
}

/// The unique-up-to-conjugacy elementary abelian Sylow p-subgroup, or an
/// UnsupportedInput error when the Sylow subgroup is not elementary abelian.
inline SubgroupPtr elementary_abelian_sylow(const FiniteGroup& G, int p)
{
    std::size_t sylow_order = 1;
    for (std::size_t n = G.order(); n % static_cast<std::size_t>(p) == 0; n /= static_cast<std::size_t>(p)) {
        sylow_order *= static_cast<std::size_t>(p);
    }
    for (const auto& S : enumerate_elem_abelians(G, p)) {
        if (S->size() == sylow_order) {
            return S;
        }
    }
    throw UnsupportedInput("subring categories need an elementary abelian Sylow " + std::to_string(p) +
                           "-subgroup; " + (G.name().empty() ? std::string("this group") : G.name()) +
                           " has none");
}

/// Checks the preconditions: p = 2, elementary abelian Sylow, and every
/// generator a Weyl-invariant polynomial in rank(P) variables.
inline SubringPresentation make_presentation(const FiniteGroup& G, int p, std::vector<PolyFp> generators)
{
    if (p != 2) {
        throw UnsupportedInput("subring categories are only supported at p = 2");
    }
    auto P = elementary_abelian_sylow(G, p);
    LinearAction weyl = weyl_action(*P);
    for (const auto& g : generators) {
        if (g.prime() != p || g.variable_count() != P->rank()) {
            throw UnsupportedInput("subring generator " + g.to_string() + " is not a polynomial in the " +
                                   std::to_string(P->rank()) + " variables of H*(BP)");
        }
        if (!g.is_homogeneous()) {
            throw UnsupportedInput("subring generator " + g.to_string() + " is not homogeneous");
        }
        if (!is_invariant(g, weyl)) {
            throw UnsupportedInput("subring generator " + g.to_string() + " is not invariant under the Weyl group");
        }
    }
    return SubringPresentation{std::move(P), std::move(weyl), std::move(generators)};
}

/// Restriction from P to a subgroup V of P: substitution by the transpose
/// of V's coordinate matrix in P.
inline PolyFp restriction(const ElemAbelian& V, const ElemAbelian& P, const PolyFp& f)
{
    if (!V.is_subgroup_of(P)) {
        throw Error("restriction: " + V.describe() + " is not contained in " + P.describe());
    }
    std::vector<std::vector<int>> cols;
    for (auto b : V.basis()) {
        cols.push_back(P.coordinates(b));
    }
    return f.substitute_linear(FpMatrix::from_columns(P.prime(), P.rank(), cols).transpose());
}

struct Embedding {
    GroupElem conjugator;
    FpMatrix matrix; // rank P x rank W, x -> g x g^-1 in P-coordinates
};

/// All g with gWg^-1 inside P, as embedding matrices (first g by index first).
inline std::vector<Embedding> embeddings_into(const ElemAbelian& W, const ElemAbelian& P)
{
    std::vector<Embedding> out;
    for (std::uint32_t i = 0; i < W.group().order(); ++i) {
        if (auto m = conjugation_matrix(W, P, GroupElem{i})) {
            out.push_back(Embedding{GroupElem{i}, std::move(*m)});
        }
    }
    return out;
}

inline Embedding embedding_into(const ElemAbelian& W, const ElemAbelian& P)
{
    for (std::uint32_t i = 0; i < W.group().order(); ++i) {
        if (auto m = conjugation_matrix(W, P, GroupElem{i})) {
            return Embedding{GroupElem{i}, std::move(*m)};
        }
    }
    throw UnsupportedInput(W.describe() + " is not conjugate into " + P.describe());
}

/// Res_W(x) for an arbitrary object W, by conjugating W into P first.
inline PolyFp restrict_to(const Embedding& e, const PolyFp& x) { return x.substitute_linear(e.matrix.transpose()); }

/// True when every choice of conjugation into P gives the same restriction
/// of every generator, for every object.
inline bool restriction_well_defined(const SubringPresentation& R)
{
    for (const auto& W : enumerate_elem_abelians(R.sylow->group(), R.sylow->prime())) {
        const auto all = embeddings_into(*W, *R.sylow);
        for (const auto& x : R.generators) {
            const PolyFp first = restrict_to(all.front(), x);
            for (const auto& e : all) {
                if (restrict_to(e, x) != first) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline std::optional<std::size_t> failing_generator(const SubringPresentation& R, const Embedding& source,
                                                    const Embedding& target, const FpMatrix& f)
{
    const FpMatrix pulled = (target.matrix * f).transpose();
    const FpMatrix direct = source.matrix.transpose();
    for (std::size_t i = 0; i < R.generators.size(); ++i) {
        if (R.generators[i].substitute_linear(pulled) != R.generators[i].substitute_linear(direct)) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// A generator x with f* Res_V(x) != Res_W(x), if any.
inline std::optional<PolyFp> distinguishing_generator(const LinearMorphism& f, const SubringPresentation& R)
{
    const auto source = embedding_into(*f.source, *R.sylow);
    const auto target = embedding_into(*f.target, *R.sylow);
    if (auto i = detail::failing_generator(R, source, target, f.matrix)) {
        return R.generators[*i];
    }
    return std::nullopt;
}

/// C_R: injective f with f* Res_V = Res_W on every generator. Checking the
/// generators suffices because both sides are ring maps. The condition is
/// tested exactly, not modulo nilpotents.
inline ChromCategory build_CR(const FiniteGroup& G, const SubringPresentation& R)
{
    if (&R.sylow->group() != &G) {
        throw Error("build_CR: presentation belongs to a different group");
    }
    const int p = R.sylow->prime();
    auto objects = enumerate_elem_abelians(G, p);
    auto witnesses = detail::conjugation_scan(G, objects);
    const std::size_t N = objects.size();
    std::vector<Embedding> emb;
    for (const auto& W : objects) {
        emb.push_back(embedding_into(*W, *R.sylow));
    }
    std::vector<std::vector<FpMatrix>> homs(N * N);
    detail::parallel_for(N * N, [&](std::size_t idx) {
        const std::size_t w = idx / N;
        const std::size_t v = idx % N;
        for (auto& m : injective_matrices(p, objects[v]->rank(), objects[w]->rank())) {
            if (!detail::failing_generator(R, emb[w], emb[v], m)) {
                homs[idx].push_back(std::move(m));
            }
        }
    });
    return ChromCategory(G, p, CategoryKind::subring, std::nullopt, std::move(objects), std::move(homs),
                         std::move(witnesses));
}

} // namespace chromcat

#endif // CHROMCAT_SUBRING_HPP
