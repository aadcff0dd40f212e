#include "camspec/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "camspec/error.hpp"
#include "camspec/lie.hpp"
#include "camspec/matrix.hpp"

namespace camspec {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void require_degree(int n) {
    if (n < 1) throw DomainError("permutation degree must be at least 1");
}

} // namespace

Permutation::Permutation(int n) {
    require_degree(n);
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    require_degree(static_cast<int>(images.size()));
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) throw DomainError("image list is not a permutation");
        seen[v] = true;
    }
    Permutation w(n);
    w.img_ = std::move(images);
    return w;
}

Permutation Permutation::transposition(int n, int i, int j) {
    require_degree(n);
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw DomainError("transposition indices must be distinct and in range");
    Permutation w(n);
    std::swap(w.img_[i - 1], w.img_[j - 1]);
    return w;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > n()) throw DomainError("permutation applied outside its domain");
    return img_[i - 1];
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n()) throw DomainError("cannot compose permutations of different degrees");
    std::vector<int> images(n());
    for (int i = 1; i <= n(); ++i) images[i - 1] = img_[other.img_[i - 1] - 1];
    return from_images(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(n());
    for (int i = 1; i <= n(); ++i) images[img_[i - 1] - 1] = i;
    return from_images(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

std::vector<GaussianRational> Permutation::act(const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != n())
        throw DomainError("tuple length does not match permutation degree");
    const Permutation w_inv = inverse();
    std::vector<GaussianRational> out;
    out.reserve(v.size());
    for (int i = 1; i <= n(); ++i) out.push_back(v[w_inv(i) - 1]);
    return out;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n(); ++i) {
        if (i) os << ' ';
        os << img_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Permutation> symmetric_group(int n) {
    require_degree(n);
    if (n > 7) throw CapacityError("symmetric group enumeration is limited to degree 7");
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> group;
    group.reserve(factorial(n));
    do {
        group.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return group;
}

std::vector<Root> inversion_set(const Permutation& w) {
    std::vector<Root> inv;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) inv.push_back(Root{i, j});
    return inv;
}

bool cocycle_check(const Permutation& w, const Permutation& w_prime) {
    if (w.n() != w_prime.n()) throw DomainError("cocycle check needs equal degrees");
    // Net signed count per unordered pair {a, b}: +1 for the root L_a - L_b
    // with a < b, -1 for its negative.  {alpha, -alpha} pairs cancel.
    std::map<std::pair<int, int>, int> net;
    for (const Root& r : inversion_set(w_prime)) net[{r.i, r.j}] += 1;
    const Permutation w_prime_inv = w_prime.inverse();
    for (const Root& r : inversion_set(w)) {
        const int a = w_prime_inv(r.i);
        const int b = w_prime_inv(r.j);
        if (a < b)
            net[{a, b}] += 1;
        else
            net[{b, a}] -= 1;
    }
    std::map<std::pair<int, int>, int> expected;
    for (const Root& r : inversion_set(w.compose(w_prime))) expected[{r.i, r.j}] = 1;
    for (auto it = net.begin(); it != net.end();) {
        if (it->second == 0)
            it = net.erase(it);
        else
            ++it;
    }
    return net == expected;
}

Permutation w0(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    Permutation w(2 * p + 1);
    std::vector<int> images = w.images();
    for (int i = 1; i <= p; ++i) std::swap(images[i - 1], images[p + i]);
    return Permutation::from_images(std::move(images));
}

bool w0_acts_as_theta(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    const int n = 2 * p + 1;
    const Permutation w = w0(p);
    // Basis of the theta-stable diagonal Cartan: the p anisotropic generators
    // (unit a_k) and the p compact-direction generators (unit t_k).
    std::vector<std::vector<GaussianRational>> basis;
    for (int k = 0; k < p; ++k) {
        std::vector<GaussianRational> a(p, GaussianRational(0));
        std::vector<GaussianRational> t(p, GaussianRational(0));
        a[k] = GaussianRational(1);
        basis.push_back(Matrix::diagonal_entries(theta_cartan_element(a, t)));
        a[k] = GaussianRational(0);
        t[k] = GaussianRational(1);
        basis.push_back(Matrix::diagonal_entries(theta_cartan_element(a, t)));
    }
    // Generic element with distinct coordinates, to rule out coincidences.
    {
        std::vector<GaussianRational> a(p, GaussianRational(0));
        std::vector<GaussianRational> t(p, GaussianRational(0));
        for (int k = 0; k < p; ++k) {
            a[k] = GaussianRational(2 * k + 3);
            t[k] = GaussianRational(1, static_cast<long>(k + 2));
        }
        basis.push_back(Matrix::diagonal_entries(theta_cartan_element(a, t)));
    }
    for (const auto& d : basis) {
        const Matrix conj = theta(p, Matrix::diagonal(d));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c && !conj.at(r, c).is_zero()) return false;
        const std::vector<GaussianRational> via_w = w.act(d);
        for (int r = 0; r < n; ++r)
            if (conj.at(r, r) != via_w[r]) return false;
    }
    return true;
}

SignedPermutation::SignedPermutation(Permutation pi, std::vector<int> signs)
    : pi_(std::move(pi)), signs_(std::move(signs)) {
    if (static_cast<int>(signs_.size()) != pi_.n())
        throw DomainError("sign vector length must match permutation degree");
    for (int s : signs_)
        if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int p) {
    return SignedPermutation(Permutation(p), std::vector<int>(p, 1));
}

std::vector<GaussianRational> SignedPermutation::act(const std::vector<GaussianRational>& v) const {
    std::vector<GaussianRational> out = pi_.act(v);
    for (int i = 0; i < p(); ++i)
        if (signs_[i] == -1) out[i] = -out[i];
    return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
    if (p() != other.p()) throw DomainError("cannot compose signed permutations of different degrees");
    const Permutation pi = pi_.compose(other.pi_);
    const Permutation pi_inv = pi_.inverse();
    std::vector<int> signs(p());
    for (int i = 1; i <= p(); ++i) signs[i - 1] = signs_[i - 1] * other.signs_[pi_inv(i) - 1];
    return SignedPermutation(pi, std::move(signs));
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= p(); ++i) {
        if (i > 1) os << ' ';
        os << (signs_[pi_(i) - 1] * pi_(i));
    }
    os << ')';
    return os.str();
}

std::vector<SignedPermutation> hyperoctahedral_group(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    if (p > 3) throw CapacityError("hyperoctahedral enumeration is limited to rank 3");
    std::vector<SignedPermutation> group;
    for (const Permutation& pi : symmetric_group(p)) {
        for (int mask = 0; mask < (1 << p); ++mask) {
            std::vector<int> signs(p);
            for (int k = 0; k < p; ++k) signs[k] = (mask >> k) & 1 ? -1 : 1;
            group.push_back(SignedPermutation(pi, std::move(signs)));
        }
    }
    std::sort(group.begin(), group.end());
    return group;
}

namespace {

// The anisotropic Cartan in eigenvalue coordinates:
// A = {(x_1, ..., x_p, 0, -x_1, ..., -x_p)}.
bool in_anisotropic_subspace(int p, const std::vector<GaussianRational>& v) {
    if (!v[p].is_zero()) return false;
    for (int k = 0; k < p; ++k)
        if (v[p + 1 + k] != -v[k]) return false;
    return true;
}

std::vector<GaussianRational> anisotropic_tuple(int p, const std::vector<GaussianRational>& x) {
    std::vector<GaussianRational> v(2 * p + 1, GaussianRational(0));
    for (int k = 0; k < p; ++k) {
        v[k] = x[k];
        v[p + 1 + k] = -x[k];
    }
    return v;
}

} // namespace

RestrictedWeyl restricted_weyl_bruteforce(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    if (p > 3) throw CapacityError("restricted Weyl brute force is limited to rank 3");

    std::vector<std::vector<GaussianRational>> a_basis;
    for (int k = 0; k < p; ++k) {
        std::vector<GaussianRational> x(p, GaussianRational(0));
        x[k] = GaussianRational(1);
        a_basis.push_back(anisotropic_tuple(p, x));
    }
    std::vector<GaussianRational> probe_x;   // distinct positive integers 1..p
    std::vector<GaussianRational> probe2_x;  // a second tuple with distinct values
    for (int k = 1; k <= p; ++k) {
        probe_x.push_back(GaussianRational(k));
        probe2_x.push_back(GaussianRational(k * k + 1, 3));
    }
    const auto probe = anisotropic_tuple(p, probe_x);
    const auto probe2 = anisotropic_tuple(p, probe2_x);

    RestrictedWeyl result;
    result.normalizer_order = 0;
    result.centralizer_order = 0;
    std::vector<SignedPermutation> induced;

    for (const Permutation& w : symmetric_group(2 * p + 1)) {
        bool normalizes = true;
        for (const auto& a : a_basis) {
            if (!in_anisotropic_subspace(p, w.act(a))) {
                normalizes = false;
                break;
            }
        }
        if (!normalizes) continue;
        result.normalizer.push_back(w);
        ++result.normalizer_order;

        bool centralizes = true;
        for (const auto& a : a_basis) {
            if (w.act(a) != a) {
                centralizes = false;
                break;
            }
        }
        if (centralizes) ++result.centralizer_order;

        // Induced signed permutation, read off the probe with x_k = k.
        const auto moved = w.act(probe);
        if (!in_anisotropic_subspace(p, moved))
            throw PropertyError("normalizer element left the anisotropic subspace on a generic point");
        std::vector<int> pi_images(p, 0);
        std::vector<int> signs(p, 1);
        for (int i = 0; i < p; ++i) {
            const GaussianRational& val = moved[i];
            if (!val.is_real() || val.is_zero())
                throw PropertyError("induced action produced a non-real or zero coordinate");
            bool found = false;
            for (int k = 1; k <= p; ++k) {
                if (val == GaussianRational(k)) {
                    pi_images[k - 1] = i + 1; // pi(k) = i+1
                    signs[i] = 1;
                    found = true;
                } else if (val == GaussianRational(-k)) {
                    pi_images[k - 1] = i + 1;
                    signs[i] = -1;
                    found = true;
                }
                if (found) break;
            }
            if (!found) throw PropertyError("induced action is not a signed permutation of the probe");
        }
        const SignedPermutation tau(Permutation::from_images(pi_images), signs);
        // Functional cross-check on a second generic tuple.
        const auto moved2 = w.act(probe2);
        const auto via_tau = tau.act(probe2_x);
        for (int i = 0; i < p; ++i)
            if (moved2[i] != via_tau[i])
                throw PropertyError("induced signed permutation failed the functional cross-check");
        induced.push_back(tau);
    }

    if (result.centralizer_order == 0 || result.normalizer_order % result.centralizer_order != 0)
        throw PropertyError("centralizer order does not divide normalizer order");
    result.order = result.normalizer_order / result.centralizer_order;

    std::sort(induced.begin(), induced.end());
    induced.erase(std::unique(induced.begin(), induced.end(),
                              [](const SignedPermutation& a, const SignedPermutation& b) { return a == b; }),
                  induced.end());
    result.matches_hyperoctahedral = (induced == hyperoctahedral_group(p));

    const long long total = factorial(2 * p + 1);
    if (total % result.normalizer_order != 0)
        throw PropertyError("normalizer order does not divide the symmetric group order");
    result.coset_count = static_cast<int>(total / result.normalizer_order);
    return result;
}

bool weight_stabilizer_check(int p) {
    if (p < 1) throw DomainError("rank must be at least 1");
    if (p > 3) throw CapacityError("weight stabilizer check is limited to rank 3");
    const int n = 2 * p + 1;
    // Basis of the trace-free diagonal Cartan: e_k - e_{k+1}, k = 1..n-1.
    std::vector<std::vector<GaussianRational>> basis;
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<GaussianRational> v(n, GaussianRational(0));
        v[k] = GaussianRational(1);
        v[k + 1] = GaussianRational(-1);
        basis.push_back(std::move(v));
    }
    long long stabilizer_order = 0;
    for (const Permutation& w : symmetric_group(n)) {
        bool fixes_weight = true;
        for (const auto& v : basis) {
            if (w.act(v)[0] != v[0]) {
                fixes_weight = false;
                break;
            }
        }
        if (fixes_weight != (w(1) == 1)) return false;
        if (fixes_weight) ++stabilizer_order;
    }
    return stabilizer_order == factorial(2 * p);
}

} // namespace camspec
