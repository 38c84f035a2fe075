#include "kleinian/residue.hpp"

#include <map>
#include <set>
#include <sstream>

#include "kleinian/permgroup.hpp"
#include "kleinian/registry.hpp"

namespace kleinian {

namespace {

int mod5(long v) { return static_cast<int>(((v % 5) + 5) % 5); }

int rational_mod5(const Rational& r) {
    if (denominator(r) != 1) throw NotGaussianInteger("non-integral coordinate " + r.str());
    BigInt m = numerator(r) % 5;
    if (m < 0) m += 5;
    return m.convert_to<int>();
}

}  // namespace

PSL2F5::PSL2F5() : m_{1, 0, 0, 1} {}

PSL2F5::PSL2F5(int a, int b, int c, int d)
    : m_{static_cast<uint8_t>(mod5(a)), static_cast<uint8_t>(mod5(b)),
         static_cast<uint8_t>(mod5(c)), static_cast<uint8_t>(mod5(d))} {
    int det = mod5(static_cast<long>(m_[0]) * m_[3] - static_cast<long>(m_[1]) * m_[2]);
    if (det != 1) throw std::invalid_argument("matrix over F5 has determinant != 1");
    canonicalize();
}

void PSL2F5::canonicalize() {
    for (uint8_t v : m_) {
        if (v == 0) continue;
        if (v > 2) {
            for (auto& e : m_) e = static_cast<uint8_t>((5 - e) % 5);
        }
        return;
    }
    throw std::invalid_argument("zero matrix over F5");
}

bool PSL2F5::is_identity() const { return m_[0] == 1 && m_[1] == 0 && m_[2] == 0 && m_[3] == 1; }

PSL2F5 PSL2F5::inverse() const { return PSL2F5(m_[3], 5 - m_[1], 5 - m_[2], m_[0]); }

PSL2F5 operator*(const PSL2F5& x, const PSL2F5& y) {
    return PSL2F5(x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
                  x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]);
}

bool PSL2F5::is_lower_unipotent() const { return m_[0] == 1 && m_[1] == 0 && m_[3] == 1; }

std::string PSL2F5::str() const {
    std::ostringstream os;
    os << "[" << int(m_[0]) << " " << int(m_[1]) << "; " << int(m_[2]) << " " << int(m_[3]) << "]";
    return os.str();
}

uint8_t reduce_scalar(const FieldElem& x, int i_image) {
    if (i_image != 2 && i_image != 3)
        throw std::invalid_argument("i must reduce to 2 or 3 (the roots of x^2 = -1 mod 5)");
    if (!x.is_gaussian_integer())
        throw NotGaussianInteger(x.str() + " is not a Gaussian integer");
    return static_cast<uint8_t>(mod5(rational_mod5(x.a()) + i_image * rational_mod5(x.c())));
}

PSL2F5 reduce_matrix(const ProjectiveMatrix& m, int i_image) {
    return PSL2F5(reduce_scalar(m.a(), i_image), reduce_scalar(m.b(), i_image),
                  reduce_scalar(m.c(), i_image), reduce_scalar(m.d(), i_image));
}

bool kernel_contains(const ProjectiveMatrix& m, int i_image) {
    return reduce_matrix(m, i_image).is_identity();
}

std::vector<PSL2F5> image_closure(const std::vector<ProjectiveMatrix>& gens, int i_image) {
    std::vector<PSL2F5> reduced;
    for (const auto& g : gens) reduced.push_back(reduce_matrix(g, i_image));
    std::set<PSL2F5> seen;
    std::vector<PSL2F5> elements{PSL2F5()};
    seen.insert(PSL2F5());
    for (size_t head = 0; head < elements.size(); ++head) {
        PSL2F5 current = elements[head];
        for (const auto& g : reduced) {
            PSL2F5 next = current * g;
            if (seen.insert(next).second) elements.push_back(next);
        }
    }
    return elements;
}

std::size_t image_order(const std::vector<ProjectiveMatrix>& gens, int i_image) {
    return image_closure(gens, i_image).size();
}

std::size_t psl2f5_order() {
    static const std::size_t order = [] {
        std::set<PSL2F5> seen;
        std::vector<PSL2F5> elements{PSL2F5()};
        seen.insert(PSL2F5());
        PSL2F5 u(1, 1, 0, 1), w(0, 1, -1, 0);
        for (size_t head = 0; head < elements.size(); ++head) {
            for (const PSL2F5& g : {u, w}) {
                PSL2F5 next = elements[head] * g;
                if (seen.insert(next).second) elements.push_back(next);
            }
        }
        return elements.size();
    }();
    return order;
}

ThetaPhiResult check_theta_equals_phi(int radius, int i_image) {
    const auto& phi = phi_images();
    const Registry& reg = registry();
    struct Letter {
        std::string name;
        int exp;
        Permutation phi;
        ProjectiveMatrix mat;
    };
    std::vector<Letter> letters;
    for (const char* name : {"p1", "p2", "p3"}) {
        const Permutation& p = phi.at(name);
        const ProjectiveMatrix& m = reg.mat(name);
        letters.push_back({name, 1, p, m});
        letters.push_back({name, -1, p.inverse(), m.inverse()});
    }
    const Permutation phif = phi.at("f");
    const PSL2F5 theta_f(1, 0, 4, 1);

    struct Node {
        Permutation phi;
        ProjectiveMatrix mat;
        std::string word;
        int last_letter;  // index into letters, -1 for the empty word
        int length;
    };
    std::vector<Node> frontier{{Permutation::identity(12), ProjectiveMatrix(), "", -1, 0}};

    auto check_node = [&](const Node& node) -> bool {
        // phi(w) must be a power of phi(f); theta(w) must be the matching
        // power of (1,0;4,1).
        Permutation acc = Permutation::identity(12);
        int power = -1;
        for (int k = 0; k < 5; ++k) {
            if (acc == node.phi) {
                power = k;
                break;
            }
            acc = acc * phif;
        }
        if (power < 0) return false;
        PSL2F5 expect;
        for (int k = 0; k < power; ++k) expect = expect * theta_f;
        return reduce_matrix(node.mat, i_image) == expect;
    };

    for (size_t head = 0; head < frontier.size(); ++head) {
        Node node = frontier[head];
        if (!check_node(node)) return {false, node.word.empty() ? "(empty word)" : node.word};
        if (node.length == radius) continue;
        for (size_t li = 0; li < letters.size(); ++li) {
            // Freely reduced words only.
            if (node.last_letter >= 0) {
                const Letter& prev = letters[node.last_letter];
                const Letter& next = letters[li];
                if (prev.name == next.name && prev.exp == -next.exp) continue;
            }
            const Letter& l = letters[li];
            std::string word = node.word.empty()
                                   ? l.name + (l.exp < 0 ? "^-1" : "")
                                   : node.word + "*" + l.name + (l.exp < 0 ? "^-1" : "");
            frontier.push_back(Node{node.phi * l.phi, node.mat * l.mat, std::move(word),
                                    static_cast<int>(li), node.length + 1});
        }
    }
    return {true, ""};
}

}  // namespace kleinian
