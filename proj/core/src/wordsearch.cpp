#include "kleinian/wordsearch.hpp"

#include <algorithm>
#include <sstream>

namespace kleinian {

namespace {

ExtendedIsometry reg_iso(const std::string& name) { return registry().get(name); }

ExtendedIsometry conj_by_c(const ExtendedIsometry& x, int level) {
    // c^-level x c^level
    const ProjectiveMatrix& c = registry().mat("c");
    ProjectiveMatrix cl;
    for (int k = 0; k < level; ++k) cl = cl * c;
    ExtendedIsometry shift = ExtendedIsometry::holomorphic(cl.inverse());
    return conjugate(shift, x);
}

}  // namespace

int GeneratedGroup::gen_index(const std::string& gen_name) const {
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k].first == gen_name) return static_cast<int>(k);
    throw std::out_of_range("group " + name + " has no generator named " + gen_name);
}

GeneratedGroup GeneratedGroup::delta0() {
    return {"Delta0", {{"s", reg_iso("s")}, {"t", reg_iso("t")}}};
}

GeneratedGroup GeneratedGroup::gamma_t0() {
    return {"GammaT0", {{"f", reg_iso("f")}, {"g", reg_iso("g")}, {"h", reg_iso("h")}}};
}

GeneratedGroup GeneratedGroup::lambda() {
    return {"Lambda", {{"p1", reg_iso("p1")}, {"p2", reg_iso("p2")}, {"p3", reg_iso("p3")}}};
}

GeneratedGroup GeneratedGroup::h0() {
    return {"H0", {{"a0", reg_iso("a0")}, {"b0", reg_iso("b0")}, {"f0", reg_iso("f0")}}};
}

GeneratedGroup GeneratedGroup::h_t0() {
    return {"HT0", {{"a0", reg_iso("a0")}, {"a1", reg_iso("a1")}, {"f0", reg_iso("f0")}}};
}

GeneratedGroup GeneratedGroup::psl2z() {
    return {"PSL2Z", {{"f0", reg_iso("f0")}, {"a0", reg_iso("a0")}}};
}

GeneratedGroup GeneratedGroup::delta_n(int n) {
    if (n < 0) throw std::invalid_argument("delta_n needs n >= 0");
    GeneratedGroup g = delta0();
    g.name = "Delta" + std::to_string(n);
    // The level-j block is c^-2(j-1) (f, g, h and their conjugate-mirror
    // copies c^-2 conj(x) c^2) c^2(j-1).
    for (int j = 1; j <= n; ++j) {
        int level = 2 * (j - 1);
        for (const char* base : {"f", "g", "h"}) {
            ExtendedIsometry x = reg_iso(base);
            g.gens.emplace_back(std::string(base) + "_" + std::to_string(j),
                                conj_by_c(x, level));
            ExtendedIsometry xbar = ExtendedIsometry::holomorphic(x.mat.entrywise_conj());
            g.gens.emplace_back(std::string(base) + "bar_" + std::to_string(j),
                                conj_by_c(conj_by_c(xbar, 2), level));
        }
    }
    return g;
}

GeneratedGroup GeneratedGroup::h_n(int n) {
    if (n < 0) throw std::invalid_argument("h_n needs n >= 0");
    GeneratedGroup g{"H" + std::to_string(n),
                     {{"f0", reg_iso("f0")}, {"b0", reg_iso("b0")}, {"a0", reg_iso("a0")}}};
    for (int k = 1; k <= n; ++k)
        g.gens.emplace_back("a" + std::to_string(k), conj_by_c(reg_iso("a0"), k));
    return g;
}

GeneratedGroup GeneratedGroup::a1_a2_f0() {
    return {"A1A2F0",
            {{"a1", reg_iso("a1")},
             {"a2", conj_by_c(reg_iso("a0"), 2)},
             {"f0", reg_iso("f0")}}};
}

void Word::append(int gen, int exp) {
    if (!letters.empty() && letters.back().gen == gen && letters.back().exp == -exp) {
        letters.pop_back();
        return;
    }
    letters.push_back({gen, exp});
}

ExtendedIsometry Word::evaluate(const GeneratedGroup& g) const {
    ExtendedIsometry acc = ExtendedIsometry::identity();
    for (const WordLetter& l : letters) {
        const ExtendedIsometry& gen = g.gens[l.gen].second;
        acc = compose(acc, l.exp > 0 ? gen : gen.inverse());
    }
    return acc;
}

std::string Word::str(const GeneratedGroup& g) const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (k) os << "*";
        os << g.gens[letters[k].gen].first;
        if (letters[k].exp < 0) os << "^-1";
    }
    return os.str();
}

namespace {

struct WordToken {
    std::string name;
    long exp;
};

std::vector<WordToken> tokenize_word(const std::string& text) {
    std::vector<WordToken> out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (!first) {
            if (text[pos] != '*') throw ParseError("expected '*' in word: " + text);
            ++pos;
            skip_ws();
        }
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected generator name in word: " + text);
        WordToken tok{text.substr(start, pos - start), 1};
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (dstart == pos) throw ParseError("expected exponent in word: " + text);
            tok.exp = std::stol(text.substr(dstart, pos - dstart));
            if (neg) tok.exp = -tok.exp;
        }
        out.push_back(std::move(tok));
        first = false;
    }
    if (out.empty()) throw ParseError("empty word");
    return out;
}

}  // namespace

Word parse_word(const std::string& text, const GeneratedGroup& g) {
    Word w;
    if (text == "1") return w;
    for (const WordToken& tok : tokenize_word(text)) {
        int idx = g.gen_index(tok.name);
        int step = tok.exp >= 0 ? 1 : -1;
        for (long k = 0; k != tok.exp; k += step) w.append(idx, step);
    }
    return w;
}

ExtendedIsometry evaluate_registry_word(const std::string& text) {
    ExtendedIsometry acc = ExtendedIsometry::identity();
    if (text == "1") return acc;
    for (const WordToken& tok : tokenize_word(text)) {
        const ExtendedIsometry& gen = registry().get(tok.name);
        ExtendedIsometry step = tok.exp >= 0 ? gen : gen.inverse();
        long reps = tok.exp >= 0 ? tok.exp : -tok.exp;
        for (long k = 0; k < reps; ++k) acc = compose(acc, step);
    }
    return acc;
}

std::optional<Word> BallIndex::find(const ExtendedIsometry& target) const {
    auto node = find_node(target);
    if (!node) return std::nullopt;
    return word_of(*node);
}

std::optional<int> BallIndex::find_node(const ExtendedIsometry& target) const {
    auto it = index_.find(target.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word BallIndex::word_of(int node) const {
    std::vector<WordLetter> reversed;
    for (int k = node; nodes_[k].letter >= 0; k = nodes_[k].parent) {
        int letter = nodes_[k].letter;
        reversed.push_back({letter / 2, letter % 2 == 0 ? -1 : 1});
    }
    Word w;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) w.append(it->gen, it->exp);
    return w;
}

bool BallIndex::audit(const GeneratedGroup& g) const {
    for (size_t node = 0; node < nodes_.size(); ++node) {
        if (word_of(static_cast<int>(node)).evaluate(g) != nodes_[node].iso) return false;
    }
    return true;
}

BallIndex enumerate_ball(const GeneratedGroup& g, int radius, std::size_t budget) {
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    BallIndex ball;
    ball.radius_ = radius;
    ExtendedIsometry id = ExtendedIsometry::identity();
    ball.nodes_.push_back({id, -1, -1, 0});
    ball.index_.emplace(id.key(), 0);
    // Letter order: generator index ascending, inverse before the generator.
    const int nletters = static_cast<int>(g.gens.size()) * 2;
    for (size_t head = 0; head < ball.nodes_.size(); ++head) {
        if (ball.nodes_[head].length == radius) continue;
        for (int letter = 0; letter < nletters; ++letter) {
            int gen = letter / 2;
            int exp = letter % 2 == 0 ? -1 : 1;
            int prev = ball.nodes_[head].letter;
            if (prev >= 0 && prev / 2 == gen && (prev % 2) != (letter % 2)) continue;
            const ExtendedIsometry& base = g.gens[gen].second;
            ExtendedIsometry next =
                compose(ball.nodes_[head].iso, exp > 0 ? base : base.inverse());
            std::string key = next.key();
            if (ball.index_.count(key)) continue;
            if (ball.nodes_.size() >= budget)
                throw BudgetExceeded("ball enumeration exceeded budget of " +
                                     std::to_string(budget) + " nodes");
            ball.index_.emplace(std::move(key), static_cast<int>(ball.nodes_.size()));
            ball.nodes_.push_back(
                {std::move(next), static_cast<int>(head), letter, ball.nodes_[head].length + 1});
        }
    }
    return ball;
}

std::optional<Word> express(const ExtendedIsometry& target, const GeneratedGroup& g, int radius,
                            std::size_t budget) {
    if (radius < 0) throw std::invalid_argument("express radius must be >= 0");
    int half = (radius + 1) / 2;
    BallIndex ball = enumerate_ball(g, half, budget);
    // target = u * v with |u|,|v| <= half: scan u by BFS order, look v up.
    int best_total = radius + 1;
    std::optional<Word> best;
    for (size_t node = 0; node < ball.size(); ++node) {
        int ulen = ball.length_of(static_cast<int>(node));
        if (ulen >= best_total) break;  // nodes are in length order
        ExtendedIsometry v = compose(ball.iso_of(static_cast<int>(node)).inverse(), target);
        auto vnode = ball.find_node(v);
        if (!vnode) continue;
        int total = ulen + ball.length_of(*vnode);
        if (total > radius || total >= best_total) continue;
        Word w = ball.word_of(static_cast<int>(node));
        for (const WordLetter& l : ball.word_of(*vnode).letters) w.append(l.gen, l.exp);
        best_total = total;
        best = std::move(w);
    }
    if (best && best->evaluate(g) != target)
        throw std::logic_error("express produced a word that does not evaluate to its target");
    return best;
}

std::optional<Word> conjugacy_search(const ExtendedIsometry& x, const ExtendedIsometry& y,
                                     const GeneratedGroup& g, int radius, std::size_t budget) {
    BallIndex ball = enumerate_ball(g, radius, budget);
    for (size_t node = 0; node < ball.size(); ++node) {
        const ExtendedIsometry& w = ball.iso_of(static_cast<int>(node));
        if (compose(compose(w, x), w.inverse()) == y) return ball.word_of(static_cast<int>(node));
    }
    return std::nullopt;
}

IdentityReport verify_identity_set(const std::vector<IdentityCheck>& identities) {
    IdentityReport report;
    for (const IdentityCheck& id : identities) {
        ExtendedIsometry lhs = evaluate_registry_word(id.lhs);
        ExtendedIsometry rhs;
        if (!id.rhs.empty() && id.rhs.front() == '[') {
            rhs = ExtendedIsometry::holomorphic(parse_matrix(id.rhs));
        } else {
            rhs = evaluate_registry_word(id.rhs);
        }
        report.rows.push_back({id.label, lhs == rhs, lhs.str(), rhs.str()});
    }
    return report;
}

bool IdentityReport::all_pass() const {
    for (const auto& row : rows)
        if (!row.pass) return false;
    return true;
}

std::string IdentityReport::first_failure() const {
    for (const auto& row : rows)
        if (!row.pass) return row.label + ": " + row.lhs_value + " != " + row.rhs_value;
    return "";
}

}  // namespace kleinian
