#include "diffhier/syntactic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "diffhier/automata.hpp"
#include "diffhier/error.hpp"

namespace diffhier {

namespace {

// Cayley-graph enumeration of the monoid generated by one generator per
// letter inside some ambient structure T. Elements are numbered in BFS
// order from the identity, which yields shortlex-least names.
template <class T, class Multiply>
Stamp generate_stamp(const Alphabet& alphabet, const T& identity, const std::vector<T>& generators,
                     Multiply multiply, std::size_t cap, std::vector<T>& objects) {
    const std::size_t k = alphabet.size();
    std::map<T, Element> index;
    std::vector<Word> names{Word()};
    std::vector<Element> parent{0};
    std::vector<std::size_t> last_letter{0};
    std::vector<Element> right; // right[x * k + a] = x·a

    objects.assign(1, identity);
    index.emplace(identity, 0);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            T next = multiply(objects[i], generators[a]);
            auto it = index.find(next);
            if (it == index.end()) {
                if (objects.size() >= cap) {
                    throw CapExceeded(cap);
                }
                it = index.emplace(std::move(next), static_cast<Element>(objects.size())).first;
                objects.push_back(it->first);
                parent.push_back(static_cast<Element>(i));
                last_letter.push_back(a);
                names.push_back(names[i] + alphabet.letter(a));
            }
            right.push_back(it->second);
        }
    }

    const std::size_t n = objects.size();
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        table[x * n] = static_cast<Element>(x);
        for (std::size_t y = 1; y < n; ++y) {
            const Element prefix = table[x * n + parent[y]];
            table[x * n + y] = right[static_cast<std::size_t>(prefix) * k + last_letter[y]];
        }
    }
    std::vector<Element> letter_image(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(k));
    return Stamp(Monoid(Monoid::Unchecked{}, n, std::move(table), 0, std::move(names)), alphabet,
                 std::move(letter_image));
}

} // namespace

std::size_t default_element_cap() {
    constexpr std::size_t kDefault = 1'000'000;
    const char* env = std::getenv("DH_ELEMENT_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
        return kDefault;
    }
    return static_cast<std::size_t>(value);
}

Stamp transition_monoid(const Dfa& dfa, std::size_t cap) {
    using Map = std::vector<State>;
    const std::size_t n = dfa.num_states();
    const std::size_t k = dfa.alphabet().size();
    Map identity(n);
    for (std::size_t q = 0; q < n; ++q) {
        identity[q] = static_cast<State>(q);
    }
    std::vector<Map> generators(k, Map(n));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t q = 0; q < n; ++q) {
            generators[a][q] = dfa.next(static_cast<State>(q), a);
        }
    }
    // Maps act on the right: (f·g)(q) = g(f(q)).
    auto compose = [](const Map& f, const Map& g) {
        Map h(f.size());
        for (std::size_t q = 0; q < f.size(); ++q) {
            h[q] = f[q] == kNoState ? kNoState : g[static_cast<std::size_t>(f[q])];
        }
        return h;
    };
    std::vector<Map> objects;
    return generate_stamp(dfa.alphabet(), identity, generators, compose, cap, objects);
}

Stamp syntactic_stamp(const Dfa& dfa, std::size_t cap) {
    return transition_monoid(minimize(dfa), cap);
}

ElementSet syntactic_image(const Stamp& stamp, const Dfa& language) {
    if (!(stamp.alphabet() == language.alphabet())) {
        throw AlphabetMismatch();
    }
    const Monoid& m = stamp.monoid();
    // Witness words: a BFS over the stamp gives one word per element even
    // when the monoid carries no names.
    std::vector<Word> witness(m.size());
    std::vector<bool> seen(m.size(), false);
    std::vector<Element> order{m.identity()};
    seen[m.identity()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < stamp.alphabet().size(); ++a) {
            const Element y = m.multiply(order[i], stamp.image(a));
            if (!seen[y]) {
                seen[y] = true;
                witness[y] = witness[order[i]] + stamp.alphabet().letter(a);
                order.push_back(y);
            }
        }
    }
    ElementSet image(m.size());
    for (Element x = 0; x < m.size(); ++x) {
        if (language.accepts(witness[x])) {
            image.insert(x);
        }
    }
    if (!equivalent(preimage(stamp, image), language)) {
        throw InvalidArgument("the stamp does not recognise the language");
    }
    return image;
}

OrderRelation syntactic_order(const Monoid& monoid, const ElementSet& image) {
    const std::size_t n = monoid.size();
    if (image.universe() != n) {
        throw InvalidArgument("image is not a subset of the monoid");
    }
    // contexts[u] = bitset of pairs (x, y) with xuy ∈ P; u <= v iff
    // contexts[u] ⊆ contexts[v].
    const std::size_t words = (n * n + 63) / 64;
    std::vector<std::uint64_t> contexts(n * words, 0);
    for (Element u = 0; u < n; ++u) {
        for (Element x = 0; x < n; ++x) {
            const Element xu = monoid.multiply(x, u);
            for (Element y = 0; y < n; ++y) {
                if (image.contains(monoid.multiply(xu, y))) {
                    const std::size_t bit = x * n + y;
                    contexts[u * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
                }
            }
        }
    }
    std::vector<bool> leq(n * n, false);
    for (Element u = 0; u < n; ++u) {
        for (Element v = 0; v < n; ++v) {
            bool included = true;
            for (std::size_t w = 0; w < words && included; ++w) {
                included = (contexts[u * words + w] & ~contexts[v * words + w]) == 0;
            }
            leq[u * n + v] = included;
        }
    }
    return OrderRelation(n, std::move(leq));
}

Element omega_power(const Monoid& monoid, Element x) {
    // Some power x^k with k <= |M| is idempotent.
    Element p = x;
    for (std::size_t k = 1; k <= monoid.size(); ++k) {
        if (monoid.is_idempotent(p)) {
            return p;
        }
        p = monoid.multiply(p, x);
    }
    throw Error("no idempotent power found; the table is not a finite monoid");
}

ElementSet idempotents(const Monoid& monoid) {
    ElementSet out(monoid.size());
    for (Element x = 0; x < monoid.size(); ++x) {
        if (monoid.is_idempotent(x)) {
            out.insert(x);
        }
    }
    return out;
}

OrderRelation j_order(const Monoid& monoid) {
    const std::size_t n = monoid.size();
    std::vector<bool> leq(n * n, false);
    for (Element t = 0; t < n; ++t) {
        for (Element u = 0; u < n; ++u) {
            const Element ut = monoid.multiply(u, t);
            for (Element v = 0; v < n; ++v) {
                leq[monoid.multiply(ut, v) * n + t] = true;
            }
        }
    }
    return OrderRelation(n, std::move(leq));
}

namespace {

struct JStructure {
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t> height; // 1 for maximal classes
    std::vector<std::size_t> chain;  // longest descending chain starting at the class
};

JStructure j_structure(const Monoid& monoid) {
    const OrderRelation order = j_order(monoid);
    const std::size_t n = monoid.size();
    std::vector<std::size_t> class_of(n, static_cast<std::size_t>(-1));
    JStructure js;
    for (Element x = 0; x < n; ++x) {
        if (class_of[x] != static_cast<std::size_t>(-1)) {
            continue;
        }
        const std::size_t c = js.classes.size();
        js.classes.emplace_back();
        for (Element y = x; y < n; ++y) {
            if (order.leq(x, y) && order.leq(y, x)) {
                class_of[y] = c;
                js.classes[c].push_back(y);
            }
        }
    }
    const std::size_t m = js.classes.size();
    auto above = [&](std::size_t c, std::size_t d) { // class d strictly above class c
        return c != d && order.leq(js.classes[c][0], js.classes[d][0]);
    };
    // Classes sorted by size of their strict up-set give a topological order.
    std::vector<std::size_t> up_count(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
            up_count[c] += above(c, d) ? 1 : 0;
        }
    }
    std::vector<std::size_t> topo(m);
    for (std::size_t c = 0; c < m; ++c) {
        topo[c] = c;
    }
    std::stable_sort(topo.begin(), topo.end(),
                     [&](std::size_t a, std::size_t b) { return up_count[a] < up_count[b]; });
    js.height.assign(m, 1);
    for (std::size_t c : topo) {
        for (std::size_t d = 0; d < m; ++d) {
            if (above(c, d)) {
                js.height[c] = std::max(js.height[c], js.height[d] + 1);
            }
        }
    }
    js.chain.assign(m, 1);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (std::size_t d = 0; d < m; ++d) {
            if (above(d, *it)) {
                js.chain[*it] = std::max(js.chain[*it], js.chain[d] + 1);
            }
        }
    }
    return js;
}

} // namespace

std::vector<std::vector<Element>> j_classes(const Monoid& monoid) {
    JStructure js = j_structure(monoid);
    std::vector<std::size_t> order(js.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return js.height[a] < js.height[b]; });
    std::vector<std::vector<Element>> out;
    for (std::size_t c : order) {
        out.push_back(js.classes[c]);
    }
    return out;
}

std::size_t j_depth(const Monoid& monoid) {
    JStructure js = j_structure(monoid);
    return *std::max_element(js.chain.begin(), js.chain.end());
}

bool is_j_trivial(const Monoid& monoid) {
    const OrderRelation order = j_order(monoid);
    return order.is_antisymmetric();
}

ProductStamp restricted_product(std::span<const Stamp> factors, std::size_t cap) {
    if (factors.empty()) {
        throw InvalidArgument("restricted product of no stamps");
    }
    const Alphabet& alphabet = factors.front().alphabet();
    for (const Stamp& s : factors) {
        if (!(s.alphabet() == alphabet)) {
            throw AlphabetMismatch();
        }
    }
    using Tuple = std::vector<Element>;
    Tuple identity;
    for (const Stamp& s : factors) {
        identity.push_back(s.monoid().identity());
    }
    std::vector<Tuple> generators(alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        for (const Stamp& s : factors) {
            generators[a].push_back(s.image(a));
        }
    }
    auto multiply = [&factors](const Tuple& x, const Tuple& y) {
        Tuple z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = factors[i].monoid().multiply(x[i], y[i]);
        }
        return z;
    };
    std::vector<Tuple> objects;
    Stamp stamp = generate_stamp(alphabet, identity, generators, multiply, cap, objects);
    return ProductStamp{std::move(stamp), std::move(objects)};
}

Stamp restricted_product(const Stamp& first, const Stamp& second, std::size_t cap) {
    const Stamp factors[] = {first, second};
    return restricted_product(std::span<const Stamp>(factors), cap).stamp;
}

Dfa preimage(const Stamp& stamp, const ElementSet& target) {
    const Monoid& m = stamp.monoid();
    if (target.universe() != m.size()) {
        throw InvalidArgument("target is not a subset of the monoid");
    }
    const std::size_t k = stamp.alphabet().size();
    std::vector<State> delta(m.size() * k);
    std::vector<bool> finals(m.size());
    for (Element x = 0; x < m.size(); ++x) {
        finals[x] = target.contains(x);
        for (std::size_t a = 0; a < k; ++a) {
            delta[x * k + a] = static_cast<State>(m.multiply(x, stamp.image(a)));
        }
    }
    return minimize(Dfa(stamp.alphabet(), m.size(), static_cast<State>(m.identity()), std::move(finals),
                        std::move(delta)));
}

PredicateReport predicates(const Stamp& stamp, const ElementSet& image) {
    const Monoid& m = stamp.monoid();
    const OrderRelation order = syntactic_order(m, image);
    const Element one = m.identity();
    PredicateReport r;

    r.shuffle_ideal = true;
    r.copolg = true;
    r.idempotent_commutative = true;
    for (Element x = 0; x < m.size(); ++x) {
        r.shuffle_ideal = r.shuffle_ideal && order.leq(one, x);
        r.copolg = r.copolg && order.leq(omega_power(m, x), one);
        r.idempotent_commutative = r.idempotent_commutative && m.is_idempotent(x);
        for (Element y = 0; y < m.size() && r.idempotent_commutative; ++y) {
            r.idempotent_commutative = m.multiply(x, y) == m.multiply(y, x);
        }
    }
    r.piecewise_testable = is_j_trivial(m);

    r.bpolg = true;
    const std::vector<Element> idem = idempotents(m).members();
    for (Element e : idem) {
        for (Element f : idem) {
            const Element ef = m.multiply(e, f);
            if (m.multiply(ef, e) == e && (ef != e || m.multiply(f, e) != e)) {
                r.bpolg = false;
            }
        }
    }
    return r;
}

} // namespace diffhier
