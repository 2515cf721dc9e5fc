#pragma once

// Finite abelian groups as explicit direct sums of cyclic groups, with
// element tuples, enumeration, and homomorphisms given by generator images.

#include "motkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace motkit {

using FinAbElem = std::vector<long>;

struct FinAbGroup {
    std::vector<long> orders;  // group = direct sum of Z/orders[i]

    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<long> o) : orders(std::move(o)) {
        for (long m : orders)
            if (m < 1) throw std::domain_error("FinAbGroup: orders must be >= 1");
    }
    static FinAbGroup cyclic(long n) { return FinAbGroup({n}); }

    size_t rank() const { return orders.size(); }

    long size() const {
        long s = 1;
        for (long m : orders) s *= m;
        return s;
    }

    FinAbElem zero() const { return FinAbElem(orders.size(), 0); }

    FinAbElem reduce(FinAbElem a) const {
        for (size_t i = 0; i < orders.size(); ++i) a[i] = mod_reduce(a[i], orders[i]);
        return a;
    }

    FinAbElem add(const FinAbElem& a, const FinAbElem& b) const {
        FinAbElem c(orders.size());
        for (size_t i = 0; i < orders.size(); ++i)
            c[i] = mod_reduce(a[i] + b[i], orders[i]);
        return c;
    }

    FinAbElem neg(const FinAbElem& a) const {
        FinAbElem c(orders.size());
        for (size_t i = 0; i < orders.size(); ++i) c[i] = mod_reduce(-a[i], orders[i]);
        return c;
    }

    FinAbElem sub(const FinAbElem& a, const FinAbElem& b) const {
        return add(a, neg(b));
    }

    FinAbElem scale(long k, const FinAbElem& a) const {
        FinAbElem c(orders.size());
        for (size_t i = 0; i < orders.size(); ++i)
            c[i] = mod_reduce(k % orders[i] * a[i], orders[i]);
        return c;
    }

    bool is_zero(const FinAbElem& a) const {
        for (long x : a)
            if (x != 0) return false;
        return true;
    }

    // mixed-radix enumeration
    long index_of(const FinAbElem& a) const {
        long idx = 0;
        for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + a[i];
        return idx;
    }

    FinAbElem elem_at(long idx) const {
        FinAbElem a(orders.size());
        for (size_t i = orders.size(); i-- > 0;) {
            a[i] = idx % orders[i];
            idx /= orders[i];
        }
        return a;
    }

    FinAbElem generator(size_t i) const {
        FinAbElem a = zero();
        a[i] = orders[i] > 1 ? 1 : 0;
        return a;
    }

    bool operator==(const FinAbGroup& o) const { return orders == o.orders; }
};

// Homomorphism determined by the images of the source generators.
struct FinAbHom {
    FinAbGroup src, dst;
    std::vector<FinAbElem> images;  // images[j] = image of src generator j

    FinAbHom() = default;
    FinAbHom(FinAbGroup s, FinAbGroup t, std::vector<FinAbElem> im)
        : src(std::move(s)), dst(std::move(t)), images(std::move(im)) {
        if (images.size() != src.orders.size())
            throw std::domain_error("FinAbHom: wrong number of generator images");
        for (size_t j = 0; j < images.size(); ++j)
            if (!dst.is_zero(dst.scale(src.orders[j], images[j])))
                throw std::domain_error("FinAbHom: image order incompatible");
    }

    static FinAbHom identity(const FinAbGroup& g) {
        std::vector<FinAbElem> im;
        for (size_t i = 0; i < g.orders.size(); ++i) im.push_back(g.generator(i));
        return FinAbHom(g, g, std::move(im));
    }

    static FinAbHom multiplication(const FinAbGroup& g, long k) {
        std::vector<FinAbElem> im;
        for (size_t i = 0; i < g.orders.size(); ++i)
            im.push_back(g.scale(k, g.generator(i)));
        return FinAbHom(g, g, std::move(im));
    }

    FinAbElem apply(const FinAbElem& a) const {
        FinAbElem out = dst.zero();
        for (size_t j = 0; j < images.size(); ++j)
            out = dst.add(out, dst.scale(a[j], images[j]));
        return out;
    }
};

}  // namespace motkit
