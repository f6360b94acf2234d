#include "defext/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "defext/error.hpp"

namespace defext {

void poly_add(PathPoly& p, const Path& path, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = p.find(path);
    if (it == p.end()) {
        p.emplace(path, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        p.erase(it);
}

PathPoly poly_sandwich(const Path& u, const PathPoly& p, const Path& v)
{
    PathPoly r;
    for (const auto& [path, c] : p) {
        auto left = compose_paths(u, path);
        if (!left)
            continue;
        auto full = compose_paths(*left, v);
        if (!full)
            continue;
        poly_add(r, *full, c);
    }
    return r;
}

namespace {

// ---------------------------------------------------------------- parsing

class ExprParser {
public:
    ExprParser(const Quiver& q, const Field& field, std::string_view text) : q_(q), field_(field), text_(text) {}

    PathPoly parse()
    {
        PathPoly result;
        skip_ws();
        if (pos_ == text_.size())
            fail("empty expression");
        bool first = true;
        while (pos_ < text_.size()) {
            Scalar sign_factor(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-')
                    sign_factor = Scalar(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, path] = term();
            if (path)
                poly_add(result, *path, sign_factor * coeff);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                          std::string(text_) + "'");
    }

    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("expected an arrow name or idempotent");
        return std::string(text_.substr(start, pos_ - start));
    }

    // Returns nullopt path for the literal zero.
    std::pair<Scalar, std::optional<Path>> term()
    {
        Scalar coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected denominator");
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
            coeff = Scalar::parse(text_.substr(start, pos_ - start), field_);
            skip_ws();
            if (peek() != '*') {
                if (coeff.is_zero())
                    return {coeff, std::nullopt};
                fail("expected '*' after scalar");
            }
            ++pos_;
            skip_ws();
        }
        std::optional<Path> path;
        while (true) {
            std::size_t start = pos_;
            std::string id = identifier();
            Path piece;
            if (auto a = q_.find_arrow(id)) {
                piece = Path::of_arrow(q_, *a);
            } else if (id.size() > 2 && id.compare(0, 2, "e_") == 0) {
                auto v = q_.find_vertex(id.substr(2));
                if (!v) {
                    pos_ = start;
                    throw Error(ErrorKind::Semantic, "unknown vertex in '" + id + "'");
                }
                piece = Path::stationary(*v);
            } else {
                pos_ = start;
                throw Error(ErrorKind::Semantic, "unknown arrow '" + id + "'");
            }
            if (!path) {
                path = piece;
            } else {
                auto c = compose_paths(*path, piece);
                if (!c)
                    throw Error(ErrorKind::Semantic, "'" + id + "' does not compose with the preceding factor in '" +
                                                         std::string(text_) + "'");
                path = *c;
            }
            skip_ws();
            if (peek() != '*')
                break;
            ++pos_;
            skip_ws();
        }
        return {coeff, path};
    }

    const Quiver& q_;
    const Field& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- rewriting

const Path& leading(const PathPoly& p) { return p.rbegin()->first; }

PathPoly make_monic(PathPoly p)
{
    Scalar inv = p.rbegin()->second.inverse();
    for (auto& [path, c] : p)
        c = c * inv;
    return p;
}

// Position of `word` inside `path`, or npos.
std::size_t find_subword(const Path& path, const Path& word, std::size_t from = 0)
{
    if (word.length() > path.length())
        return std::string::npos;
    for (std::size_t k = from; k + word.length() <= path.length(); ++k)
        if (std::equal(word.arrows.begin(), word.arrows.end(), path.arrows.begin() + static_cast<std::ptrdiff_t>(k)))
            return k;
    return std::string::npos;
}

Path subpath(const Path& p, std::size_t from, std::size_t len, const Quiver& q)
{
    if (len == 0) {
        std::size_t v = from == 0 ? p.source : q.arrow(p.arrows[from - 1]).target;
        return Path::stationary(v);
    }
    Path r;
    r.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                    p.arrows.begin() + static_cast<std::ptrdiff_t>(from + len));
    r.source = q.arrow(r.arrows.front()).source;
    r.target = q.arrow(r.arrows.back()).target;
    return r;
}

class Rewriter {
public:
    explicit Rewriter(const Quiver& q) : q_(q) {}

    std::vector<PathPoly> rules;

    // Index of a rule whose leading path divides `p`, with its position.
    std::optional<std::pair<std::size_t, std::size_t>> divisor(const Path& p) const
    {
        for (std::size_t i = 0; i < rules.size(); ++i) {
            std::size_t k = find_subword(p, leading(rules[i]));
            if (k != std::string::npos)
                return std::make_pair(i, k);
        }
        return std::nullopt;
    }

    PathPoly reduce(PathPoly work) const
    {
        PathPoly done;
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Path p = it->first;
            Scalar c = it->second;
            auto div = divisor(p);
            if (!div) {
                done.emplace(p, c);
                work.erase(it);
                continue;
            }
            const PathPoly& g = rules[div->first];
            const std::size_t len = leading(g).length();
            Path u = subpath(p, 0, div->second, q_);
            Path v = subpath(p, div->second + len, p.length() - div->second - len, q_);
            for (const auto& [path, coeff] : poly_sandwich(u, g, v))
                poly_add(work, path, -c * coeff);
        }
        return done;
    }

private:
    const Quiver& q_;
};

} // namespace

PathPoly parse_path_poly(const Quiver& q, const Field& field, std::string_view text)
{
    return ExprParser(q, field, text).parse();
}

std::size_t QuotientAlgebra::default_length_bound(const Quiver& q, const std::vector<PathPoly>& relations)
{
    std::size_t longest = 0;
    for (const auto& r : relations)
        for (const auto& [p, c] : r)
            longest = std::max(longest, p.length());
    return std::max(2 * longest + 2, q.vertex_count());
}

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::build(Quiver q, Field field, std::vector<PathPoly> relations,
                                                              std::size_t length_bound)
{
    std::shared_ptr<QuotientAlgebra> a(new QuotientAlgebra());
    a->quiver_ = std::move(q);
    a->field_ = field;
    a->relations_ = std::move(relations);
    a->length_bound_ = length_bound == 0 ? default_length_bound(a->quiver_, a->relations_) : length_bound;
    const Quiver& Q = a->quiver_;
    const std::size_t L = a->length_bound_;

    Rewriter rw(Q);
    for (std::size_t idx = 0; idx < a->relations_.size(); ++idx) {
        const PathPoly& r = a->relations_[idx];
        if (r.empty())
            continue;
        const Path& lead = leading(r);
        for (const auto& [p, c] : r) {
            if (p.source != lead.source || p.target != lead.target)
                throw Error(ErrorKind::NonParallelRelation,
                            "relation " + std::to_string(idx + 1) + " mixes paths with different endpoints");
            if (p.length() < 2)
                throw Error(ErrorKind::NotAdmissible, "relation " + std::to_string(idx + 1) +
                                                          " has a term outside the square of the arrow ideal");
        }
    }

    // Buchberger-style completion on overlaps of leading paths.
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<PathPoly> deferred;
    auto add_rule = [&](PathPoly g) {
        g = make_monic(std::move(g));
        const std::size_t n = rw.rules.size();
        rw.rules.push_back(std::move(g));
        for (std::size_t i = 0; i <= n; ++i) {
            pairs.emplace_back(i, n);
            if (i != n)
                pairs.emplace_back(n, i);
        }
    };
    auto consider = [&](const PathPoly& s) {
        PathPoly r = rw.reduce(s);
        if (r.empty())
            return;
        if (leading(r).length() <= L)
            add_rule(std::move(r));
        else
            deferred.push_back(std::move(r));
    };
    for (const auto& r : a->relations_)
        if (!r.empty())
            consider(r);

    auto certified = [&]() {
        for (const auto& p : enumerate_paths(Q, L))
            if (p.length() == L && !rw.divisor(p))
                return false;
        return true;
    };

    while (true) {
        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            const PathPoly gi = rw.rules[i];
            const PathPoly gj = rw.rules[j];
            const Path& wi = leading(gi);
            const Path& wj = leading(gj);
            // inclusion: wi inside wj
            if (i != j) {
                for (std::size_t k = find_subword(wj, wi); k != std::string::npos; k = find_subword(wj, wi, k + 1)) {
                    Path u = subpath(wj, 0, k, Q);
                    Path v = subpath(wj, k + wi.length(), wj.length() - k - wi.length(), Q);
                    PathPoly s = gj;
                    for (const auto& [p, c] : poly_sandwich(u, gi, v))
                        poly_add(s, p, -c);
                    consider(s);
                }
            }
            // proper overlap: suffix of wi == prefix of wj
            for (std::size_t len = 1; len < wi.length() && len < wj.length(); ++len) {
                if (!std::equal(wi.arrows.end() - static_cast<std::ptrdiff_t>(len), wi.arrows.end(),
                                wj.arrows.begin()))
                    continue;
                Path x = subpath(wi, 0, wi.length() - len, Q);
                Path z = subpath(wj, len, wj.length() - len, Q);
                PathPoly s = poly_sandwich(Path::stationary(wi.source), gi, z);
                for (const auto& [p, c] : poly_sandwich(x, gj, Path::stationary(wj.target)))
                    poly_add(s, p, -c);
                consider(s);
            }
        }
        if (!certified())
            throw Error(ErrorKind::FinitenessNotCertified,
                        "some path of length " + std::to_string(L) + " is irreducible; raise length_bound");
        std::vector<PathPoly> pending;
        pending.swap(deferred);
        for (const auto& d : pending)
            consider(d);
        if (pairs.empty() && deferred.empty())
            break;
    }

    // Reduced basis: drop rules whose leading path contains another's.
    std::vector<PathPoly> kept;
    for (std::size_t i = 0; i < rw.rules.size(); ++i) {
        const Path& wi = leading(rw.rules[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < rw.rules.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Path& wj = leading(rw.rules[j]);
            if (find_subword(wi, wj) != std::string::npos && (wj.length() < wi.length() || j < i))
                redundant = true;
        }
        if (!redundant)
            kept.push_back(rw.rules[i]);
    }
    rw.rules = kept;
    for (auto& g : rw.rules) {
        const Path lead = leading(g);
        PathPoly tail = g;
        tail.erase(lead);
        PathPoly reduced = rw.reduce(tail);
        poly_add(reduced, lead, Scalar(1));
        g = std::move(reduced);
    }
    std::sort(rw.rules.begin(), rw.rules.end(),
              [](const PathPoly& x, const PathPoly& y) { return PathLess{}(leading(x), leading(y)); });
    a->groebner_ = rw.rules;

    for (auto& p : enumerate_paths(Q, L == 0 ? 0 : L - 1))
        if (!rw.divisor(p))
            a->basis_.push_back(p);
    for (std::size_t i = 0; i < a->basis_.size(); ++i)
        a->index_.emplace(a->basis_[i], i);

    StructuredAlgebra::Data data;
    data.field = field;
    const std::size_t n = a->basis_.size();
    for (const auto& p : a->basis_)
        data.labels.push_back(path_to_string(Q, p));
    data.vertex_labels = Q.vertices();
    data.products.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = compose_paths(a->basis_[i], a->basis_[j]);
            if (!c)
                continue;
            PathPoly nf = a->normal_form(PathPoly{{*c, Scalar(1)}});
            SparseVec s;
            for (const auto& [p, coeff] : nf)
                s.emplace_back(a->index_.at(p), coeff);
            std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            data.products[i * n + j] = std::move(s);
        }
    for (std::size_t v = 0; v < Q.vertex_count(); ++v)
        data.frame.push_back(a->index_.at(Path::stationary(v)));
    for (std::size_t i = 0; i < n; ++i)
        if (a->basis_[i].length() > 0)
            data.radical.push_back(i);
    try {
        a->algebra_ = StructuredAlgebra::create(std::move(data), "A");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAdmissible)
            throw;
        throw Error(ErrorKind::NotAdmissible, e.what());
    }
    return a;
}

PathPoly QuotientAlgebra::normal_form(PathPoly p) const
{
    Rewriter rw(quiver_);
    rw.rules = groebner_;
    return rw.reduce(std::move(p));
}

std::optional<std::size_t> QuotientAlgebra::basis_index(const Path& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Element QuotientAlgebra::reduce(const PathPoly& p) const
{
    PathPoly nf = normal_form(p);
    SparseVec s;
    for (const auto& [path, c] : nf) {
        auto idx = basis_index(path);
        if (!idx)
            throw Error(ErrorKind::FinitenessNotCertified, "normal form outside the certified basis");
        s.emplace_back(*idx, c);
    }
    std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return algebra_->make(std::move(s));
}

Element QuotientAlgebra::parse(std::string_view text) const { return reduce(parse_path_poly(quiver_, field_, text)); }

std::vector<Element> QuotientAlgebra::hom_basis(std::size_t i, std::size_t j) const
{
    std::vector<Element> r;
    for (auto b : algebra_->corner_basis(i, j))
        r.push_back(algebra_->basis_element(b));
    return r;
}

} // namespace defext
