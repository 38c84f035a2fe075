#include "kleinian/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kleinian {

Permutation::Permutation(std::vector<int> images_one_based) {
    const int n = static_cast<int>(images_one_based.size());
    std::vector<bool> seen(n, false);
    img_.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = images_one_based[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("image list is not a bijection of {1..n}");
        seen[v - 1] = true;
        img_[i] = v - 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.compare(pos, 2, "id") == 0) pos += 2;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("expected point in cycle notation: " + text);
            int point = std::stoi(text.substr(start, pos - start));
            if (point < 1 || point > degree)
                throw std::invalid_argument("point out of range in cycle notation: " + text);
            cycle.push_back(point);
        }
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
            img[from - 1] = to;
        }
    }
    return Permutation(std::move(img));
}

int Permutation::apply(int point) const {
    if (point < 1 || point > degree()) throw std::out_of_range("point out of range");
    return img_[point - 1] + 1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Permutation::order() const {
    Permutation p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i + 1;
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch in product");
    std::vector<int> img(x.degree());
    for (int i = 0; i < x.degree(); ++i) img[i] = x.img_[y.img_[i]] + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::pow(int e) const {
    Permutation acc = identity(degree());
    Permutation base = e >= 0 ? *this : inverse();
    int k = e >= 0 ? e : -e;
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

std::string Permutation::key() const {
    std::string s;
    s.reserve(img_.size());
    for (int v : img_) s.push_back(static_cast<char>(v + 1));
    return s;
}

std::string Permutation::cycles() const {
    std::vector<bool> done(degree(), false);
    std::ostringstream os;
    bool any = false;
    for (int start = 0; start < degree(); ++start) {
        if (done[start] || img_[start] == start) continue;
        os << "(";
        int p = start;
        bool first = true;
        while (!done[p]) {
            done[p] = true;
            if (!first) os << " ";
            os << (p + 1);
            first = false;
            p = img_[p];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "id";
}

PermGroup PermGroup::closure(std::vector<Permutation> generators, std::size_t budget) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

    PermGroup out;
    out.generators_ = generators;
    Permutation id = Permutation::identity(degree);
    out.elements_.push_back(id);
    out.keys_.insert(id.key());
    for (std::size_t head = 0; head < out.elements_.size(); ++head) {
        Permutation current = out.elements_[head];
        for (const auto& g : generators) {
            Permutation next = current * g;
            if (out.keys_.insert(next.key()).second) {
                if (out.elements_.size() >= budget)
                    throw ClosureBudgetExceeded("closure exceeded budget of " +
                                                std::to_string(budget) + " elements");
                out.elements_.push_back(std::move(next));
            }
        }
    }
    return out;
}

PermGroup PermGroup::trivial(int degree) {
    return closure({Permutation::identity(degree)});
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
    PermGroup out;
    for (auto& e : elements) {
        if (out.keys_.insert(e.key()).second) out.elements_.push_back(std::move(e));
    }
    std::stable_partition(out.elements_.begin(), out.elements_.end(),
                          [](const Permutation& p) { return p.is_identity(); });
    out.generators_ = out.elements_;
    return out;
}

int PermGroup::degree() const { return elements_.front().degree(); }

PermGroup PermGroup::stabilizer(int point) const {
    std::vector<Permutation> fixed;
    for (const auto& e : elements_)
        if (e.apply(point) == point) fixed.push_back(e);
    return from_elements(std::move(fixed));
}

std::vector<int> PermGroup::orbit(int point) const {
    std::set<int> seen;
    for (const auto& e : elements_) seen.insert(e.apply(point));
    return std::vector<int>(seen.begin(), seen.end());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    for (const auto& e : elements_)
        if (!other.contains(e)) return false;
    return true;
}

bool operator==(const PermGroup& x, const PermGroup& y) {
    return x.keys_ == y.keys_;
}

RelationAudit verify_relations(const std::map<std::string, Permutation>& images,
                               const std::vector<Relation>& relations) {
    RelationAudit audit;
    for (const auto& rel : relations) {
        if (rel.word.empty()) throw std::invalid_argument("empty relation " + rel.label);
        Permutation acc = Permutation::identity(images.begin()->second.degree());
        for (const auto& [name, exp] : rel.word) {
            auto it = images.find(name);
            if (it == images.end())
                throw std::invalid_argument("relation " + rel.label + " uses unknown name " + name);
            acc = acc * it->second.pow(exp);
        }
        if (!acc.is_identity()) {
            audit.ok = false;
            audit.first_failed = rel.label;
            return audit;
        }
    }
    return audit;
}

int BlockSystem::degree() const {
    int n = 0;
    for (const auto& [name, pts] : blocks)
        for (int p : pts) n = std::max(n, p);
    return n;
}

void BlockSystem::validate(int expected_degree) const {
    std::set<int> all;
    for (const auto& [name, pts] : blocks) {
        for (int p : pts) {
            if (p < 1 || p > expected_degree)
                throw std::invalid_argument("block " + name + " contains out-of-range point");
            if (!all.insert(p).second)
                throw std::invalid_argument("blocks overlap at point " + std::to_string(p));
        }
    }
    if (static_cast<int>(all.size()) != expected_degree)
        throw std::invalid_argument("blocks do not cover {1..degree}");
}

Permutation block_image(const Permutation& p, const BlockSystem& blocks,
                        const std::string& generator_name) {
    blocks.validate(p.degree());
    const int nblocks = static_cast<int>(blocks.blocks.size());
    std::vector<int> img(nblocks, 0);
    for (int b = 0; b < nblocks; ++b) {
        std::set<int> image;
        for (int pt : blocks.blocks[b].second) image.insert(p.apply(pt));
        int target = -1;
        for (int k = 0; k < nblocks; ++k) {
            if (image == blocks.blocks[k].second) {
                target = k;
                break;
            }
        }
        if (target < 0) throw NotBlockInvariant(generator_name, blocks.blocks[b].first);
        img[b] = target + 1;
    }
    return Permutation(std::move(img));
}

PermGroup block_action(const PermGroup& g, const BlockSystem& blocks) {
    std::vector<Permutation> images;
    for (const auto& gen : g.generators()) images.push_back(block_image(gen, blocks));
    return PermGroup::closure(std::move(images));
}

std::string block_cycles(const Permutation& on_blocks, const BlockSystem& blocks) {
    std::string digits = on_blocks.cycles();
    if (digits == "id") return digits;
    std::ostringstream os;
    size_t pos = 0;
    while (pos < digits.size()) {
        char ch = digits[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos;
            while (pos < digits.size() && std::isdigit(static_cast<unsigned char>(digits[pos])))
                ++pos;
            int idx = std::stoi(digits.substr(start, pos - start));
            os << blocks.name_of(idx - 1);
        } else {
            os << ch;
            ++pos;
        }
    }
    return os.str();
}

std::vector<PermGroup> all_subgroups(const PermGroup& h) {
    if (h.order() > 10000)
        throw ClosureBudgetExceeded("subgroup enumeration capped at |H| <= 10^4");
    auto group_key = [](const PermGroup& g) {
        std::vector<std::string> keys;
        for (const auto& e : g.elements()) keys.push_back(e.key());
        std::sort(keys.begin(), keys.end());
        std::string joined;
        for (const auto& k : keys) joined += k + "|";
        return joined;
    };

    std::map<std::string, PermGroup> found;
    for (const auto& e : h.elements()) {
        PermGroup cyclic = PermGroup::closure({e});
        found.emplace(group_key(cyclic), std::move(cyclic));
    }
    // Close the collection under joins.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<const PermGroup*> current;
        for (const auto& [key, grp] : found) current.push_back(&grp);
        for (size_t i = 0; i < current.size(); ++i) {
            for (size_t j = i + 1; j < current.size(); ++j) {
                std::vector<Permutation> gens = current[i]->elements();
                gens.insert(gens.end(), current[j]->elements().begin(),
                            current[j]->elements().end());
                PermGroup join = PermGroup::closure(std::move(gens), h.order() + 1);
                std::string key = group_key(join);
                if (!found.count(key)) {
                    found.emplace(key, std::move(join));
                    grew = true;
                }
            }
        }
    }
    std::vector<PermGroup> out;
    for (auto& [key, grp] : found) out.push_back(std::move(grp));
    std::sort(out.begin(), out.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return out;
}

PermGroup conjugate_group(const Permutation& x, const PermGroup& h) {
    std::vector<Permutation> conj;
    Permutation xi = x.inverse();
    for (const auto& e : h.elements()) conj.push_back(x * e * xi);
    return PermGroup::closure(std::move(conj));
}

PermGroup largest_normalized(const PermGroup& h, const Permutation& x) {
    Permutation xi = x.inverse();
    auto normalized = [&](const PermGroup& k) {
        for (const auto& e : k.elements())
            if (!k.contains(x * e * xi)) return false;
        return true;
    };
    std::vector<PermGroup> subs = all_subgroups(h);
    const PermGroup* best = nullptr;
    std::vector<const PermGroup*> all_normalized;
    for (const auto& k : subs) {
        if (normalized(k)) {
            all_normalized.push_back(&k);
            if (!best || k.order() > best->order()) best = &k;
        }
    }
    // The x-normalized subgroups are closed under join, so the largest
    // contains every other one; anything else means the enumeration is broken.
    for (const auto* k : all_normalized) {
        if (!k->is_subgroup_of(*best))
            throw std::logic_error("normalized subgroups have no unique maximum");
    }
    return *best;
}

PermGroup intersect(const PermGroup& h1, const PermGroup& h2) {
    std::vector<Permutation> common;
    for (const auto& e : h1.elements())
        if (h2.contains(e)) common.push_back(e);
    return PermGroup::from_elements(std::move(common));
}

std::vector<std::vector<int>> orbits_of_affine_map(int modulus, int multiplier) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    int a = ((multiplier % modulus) + modulus) % modulus;
    if (std::gcd(a, modulus) != 1)
        throw std::invalid_argument("multiplier must be a unit modulo " + std::to_string(modulus));
    std::vector<bool> done(modulus, false);
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < modulus; ++start) {
        if (done[start]) continue;
        std::vector<int> orbit;
        int j = start;
        while (!done[j]) {
            done[j] = true;
            orbit.push_back(j);
            j = static_cast<int>((static_cast<long>(a) * j) % modulus);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

const std::map<std::string, Permutation>& phi_images() {
    static const std::map<std::string, Permutation> images = [] {
        std::map<std::string, Permutation> m;
        Permutation a0 = Permutation::from_cycles("(1 5 9)(2 6 10)(3 7 11)(4 8 12)", 12);
        Permutation a1 = Permutation::from_cycles("(1 8 10)(2 7 9)(3 6 12)(4 5 11)", 12);
        Permutation f0 = Permutation::from_cycles("(1 5 11 10 3)(2 7 6 8 12)", 12);
        Permutation f = a0 * f0 * a0.inverse();
        Permutation q = a0.inverse() * a1;
        Permutation g = q * f0.inverse() * q.inverse();
        Permutation h = a1 * a0 * f0.inverse() * a1;
        Permutation m1 = (f0 * a0.inverse()).pow(2) * f0.inverse();
        Permutation p1 = f.inverse();
        Permutation p2 = f * g.inverse() * f.inverse() * h.inverse() * g;
        Permutation w = h.inverse() * f * g;
        Permutation p3 = w.inverse() * g.inverse() * w;
        Permutation p4 = p1 * p2 * p3.inverse();
        m.emplace("a0", a0);
        m.emplace("a1", a1);
        m.emplace("f0", f0);
        m.emplace("f", f);
        m.emplace("g", g);
        m.emplace("h", h);
        m.emplace("m1", m1);
        m.emplace("p1", p1);
        m.emplace("p2", p2);
        m.emplace("p3", p3);
        m.emplace("p4", p4);
        return m;
    }();
    return images;
}

const BlockSystem& standard_blocks() {
    static const BlockSystem blocks{{
        {"C", {1, 5, 9}},
        {"D", {8, 2, 11}},
        {"E", {3, 6, 12}},
        {"F", {4, 7, 10}},
    }};
    return blocks;
}

}  // namespace kleinian
