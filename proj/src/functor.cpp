#include "s2r/functor.hpp"

#include <stdexcept>

namespace s2r {

Vec RingFunctor::apply_value(int deg, const Vec& v) const {
    const GradedRing& R = source->ring();
    const GradedRing& R2 = target->ring();
    Vec c = R.component_coords(deg, v);
    Vec c2 = mat_apply(comp_map[deg], c, R2.p());
    return R2.component_embed(obj_map[deg], c2);
}

Mor RingFunctor::apply(const Mor& m) const {
    int d = source->hom_degree(m.src, m.tgt);
    Vec v = vec_is_zero(m.val) ? target->ring().zero() : apply_value(d, m.val);
    return {obj_map[m.src], obj_map[m.tgt], std::move(v)};
}

std::vector<std::string> RingFunctor::check_structure() const {
    std::vector<std::string> out;
    const TwoRing& S = *source;
    const TwoRing& T = *target;
    const GradingGroup& G = S.group();

    if (static_cast<int>(obj_map.size()) != G.size()) {
        out.push_back("object map has wrong size");
        return out;
    }
    if (source->ring().p() != target->ring().p()) {
        out.push_back("characteristic mismatch");
        return out;
    }

    // group homomorphism
    if (obj_map[G.zero()] != T.group().zero()) out.push_back("object map does not fix 0");
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b)
            if (obj_map[G.add(a, b)] != T.group().add(obj_map[a], obj_map[b])) {
                out.push_back("object map is not additive");
                a = b = G.size();
            }

    for (int d = 0; d < G.size(); ++d) {
        const Mat& m = comp_map[d];
        if (m.cols != S.ring().component_dim(d) ||
            m.rows != T.ring().component_dim(obj_map[d])) {
            out.push_back("component map shape mismatch at degree " + std::to_string(d));
            return out;
        }
    }

    if (!(apply(S.identity(G.zero())) == T.identity(T.group().zero())))
        out.push_back("unit not preserved");

    // composition and tensor on all morphism pairs (basis-valued generators
    // suffice by linearity, over all endpoint placements)
    const GradedRing& R = S.ring();
    for (int i = 0; i < R.dim(); ++i)
        for (int j = 0; j < R.dim(); ++j) {
            Vec bi = R.zero(), bj = R.zero();
            bi[i] = 1;
            bj[j] = 1;
            int di = R.basis_degrees()[i], dj = R.basis_degrees()[j];
            for (int g = 0; g < G.size(); ++g) {
                // composition: g -> g+dj -> g+dj+di
                Mor a{G.add(g, dj), G.add(g, G.add(dj, di)), bi};
                Mor b{g, G.add(g, dj), bj};
                if (!(apply(S.compose(a, b)) == T.compose(apply(a), apply(b)))) {
                    out.push_back("composition not preserved");
                    return out;
                }
                for (int h = 0; h < G.size(); ++h) {
                    Mor x{g, G.add(g, di), bi};
                    Mor y{h, G.add(h, dj), bj};
                    if (!(apply(S.tensor(x, y)) == T.tensor(apply(x), apply(y)))) {
                        out.push_back("tensor not preserved");
                        return out;
                    }
                }
            }
        }

    return out;
}

RingFunctor identity_functor(std::shared_ptr<const TwoRing> t) {
    RingFunctor f;
    f.source = t;
    f.target = t;
    const GradedRing& R = t->ring();
    for (int g = 0; g < t->objects(); ++g) f.obj_map.push_back(g);
    for (int d = 0; d < t->objects(); ++d) {
        int n = R.component_dim(d);
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        f.comp_map.push_back(std::move(m));
    }
    return f;
}

RingFunctor compose_functors(const RingFunctor& g, const RingFunctor& f) {
    if (g.source.get() != f.target.get())
        throw std::invalid_argument("compose_functors: endpoint mismatch");
    RingFunctor h;
    h.source = f.source;
    h.target = g.target;
    for (std::size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map.push_back(g.obj_map[f.obj_map[i]]);
    int p = g.target->ring().p();
    for (std::size_t d = 0; d < f.comp_map.size(); ++d)
        h.comp_map.push_back(mat_mul(g.comp_map[f.obj_map[d]], f.comp_map[d], p));
    return h;
}

}  // namespace s2r
