#include "braidforge/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace braidforge {

void FPGroup::add_relator(FreeWord w) {
    w = w.cyclically_reduced();
    if (!w.empty()) relators.push_back(std::move(w));
}

int FPGroup::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i) + 1;
    return 0;
}

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> diag;
    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // find the smallest nonzero pivot in the remaining block
        size_t pr = r, pc = c;
        long long best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_ll(m[i][j]) < best)) {
                    best = abs_ll(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
        if (m[r][c] < 0)
            for (size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];

        bool clean = true;
        for (size_t i = r + 1; i < rows; ++i) {
            long long q = m[i][c] / m[r][c];
            if (q != 0)
                for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
            if (m[i][c] != 0) clean = false;
        }
        for (size_t j = c + 1; j < cols; ++j) {
            long long q = m[r][j] / m[r][c];
            if (q != 0)
                for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
            if (m[r][j] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; pick a new pivot

        diag.push_back(m[r][c]);
        ++r;
        ++c;
    }
    // enforce the divisibility chain d_k | d_{k+1}
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] != 0) {
                long long a = diag[i], b = diag[j];
                long long g = std::gcd(a, b);
                long long l = a / g * b;
                diag[i] = g;
                diag[j] = l;
            }
        }
        std::sort(diag.begin() + i, diag.end());
    }
    return diag;
}

AbelianInvariants abelianize(const FPGroup& g) {
    const int n = static_cast<int>(g.generators.size());
    std::vector<std::vector<long long>> m;
    for (const auto& rel : g.relators) m.push_back(rel.exponents(n));
    if (m.empty()) m.push_back(std::vector<long long>(n, 0));

    auto diag = smith_diagonal(std::move(m));
    AbelianInvariants inv;
    int rank = 0;
    for (long long d : diag)
        if (abs_ll(d) > 1) inv.torsion.push_back(abs_ll(d));
    rank = static_cast<int>(diag.size());
    inv.free_rank = n - rank;
    // diag entries equal to 1 kill a generator each; zeros cannot appear
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

std::string AbelianInvariants::str() const {
    std::ostringstream out;
    bool first = true;
    for (long long t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    for (int i = 0; i < free_rank; ++i) {
        if (!first) out << " + ";
        out << "Z";
        first = false;
    }
    if (first) out << "trivial";
    return out.str();
}

FPGroup tietze_simplify(const FPGroup& g, size_t budget) {
    FPGroup cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ri = 0; ri < cur.relators.size(); ++ri) {
            const FreeWord& rel = cur.relators[ri];
            if (rel.size() > budget + 1) continue;
            // find a generator occurring exactly once in this relator
            int gen = 0;
            size_t at = 0;
            for (size_t i = 0; i < rel.letters().size() && gen == 0; ++i) {
                int cand = std::abs(rel.letters()[i]);
                int count = 0;
                for (int l : rel.letters())
                    if (std::abs(l) == cand) ++count;
                if (count == 1) {
                    gen = cand;
                    at = i;
                }
            }
            if (gen == 0) continue;

            // rel = u g^{+-1} v  ->  g = (u^-1 v^-1)^{+-1}
            FreeWord u(std::vector<int>(rel.letters().begin(), rel.letters().begin() + at));
            FreeWord v(std::vector<int>(rel.letters().begin() + at + 1, rel.letters().end()));
            bool positive = rel.letters()[at] > 0;
            FreeWord image = u.inverse() * v.inverse();
            if (!positive) image = image.inverse();

            // substitute into every other relator, drop this one, delete g
            FPGroup next;
            next.generators = cur.generators;
            next.generators.erase(next.generators.begin() + (gen - 1));
            auto renumber = [&](int l) {
                int a = std::abs(l);
                int r = a > gen ? a - 1 : a;
                return l > 0 ? r : -r;
            };
            for (size_t rj = 0; rj < cur.relators.size(); ++rj) {
                if (rj == ri) continue;
                FreeWord out;
                for (int l : cur.relators[rj].letters()) {
                    if (std::abs(l) == gen) {
                        FreeWord img = (l > 0) ? image : image.inverse();
                        for (int x : img.letters()) out.push(renumber(x));
                    } else {
                        out.push(renumber(l));
                    }
                }
                next.add_relator(std::move(out));
            }
            cur = std::move(next);
            changed = true;
            break;
        }
    }
    return cur;
}

std::string print_presentation(const FPGroup& g) {
    std::ostringstream out;
    out << "generators";
    for (const auto& s : g.generators) out << ' ' << s;
    out << "\n";
    for (const auto& rel : g.relators) {
        bool first = true;
        for (int l : rel.letters()) {
            if (!first) out << '*';
            out << g.generators[std::abs(l) - 1];
            if (l < 0) out << "^-1";
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

FPGroup parse_presentation(const std::string& text) {
    FPGroup g;
    std::istringstream in(text);
    std::string line;
    std::map<std::string, int> index;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "generators") {
            std::string name;
            while (ls >> name) {
                g.generators.push_back(name);
                index[name] = static_cast<int>(g.generators.size());
            }
            continue;
        }
        // relator: name[^-1] ('*' name[^-1])*
        std::string rel_text = tok;
        std::string more;
        while (ls >> more) rel_text += more;
        FreeWord w;
        size_t pos = 0;
        while (pos < rel_text.size()) {
            size_t star = rel_text.find('*', pos);
            std::string piece = rel_text.substr(pos, star == std::string::npos ? star : star - pos);
            pos = (star == std::string::npos) ? rel_text.size() : star + 1;
            int sign = 1;
            if (piece.size() > 3 && piece.substr(piece.size() - 3) == "^-1") {
                sign = -1;
                piece = piece.substr(0, piece.size() - 3);
            }
            auto it = index.find(piece);
            if (it == index.end()) throw braid_error("unknown generator " + piece);
            w.push(sign * it->second);
        }
        g.add_relator(std::move(w));
    }
    return g;
}

}  // namespace braidforge
