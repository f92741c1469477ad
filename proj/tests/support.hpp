#pragma once

// Seeded generators for property tests.

#include "symlie/algebra.hpp"

#include <random>

namespace symlie::testing {

class Gen {
public:
	explicit Gen(std::uint64_t seed) : rng_(seed) {}

	long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

	Rational rational(long bound = 9)
	{
		long num = integer(-bound, bound);
		long den = integer(1, bound);
		Rational q(num, den);
		q.canonicalize();
		return q;
	}

	Scalar scalar(bool with_omega = true)
	{
		if (!with_omega)
			return Scalar(rational());
		return Scalar(rational(), rational());
	}

	Scalar nonzero_scalar(bool with_omega = true)
	{
		for (;;) {
			Scalar s = scalar(with_omega);
			if (!s.is_zero())
				return s;
		}
	}

	Vec vec(std::size_t n, bool with_omega = false)
	{
		Vec v(n);
		for (auto &x : v)
			x = integer(0, 2) == 0 ? Scalar() : scalar(with_omega);
		return v;
	}

	Matrix invertible(std::size_t n)
	{
		for (;;) {
			Matrix m(n, n);
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					m(i, j) = Scalar(integer(-2, 2));
			try {
				(void)inverse(m);
				return m;
			} catch (const ArithmeticError &) {
			}
		}
	}

	std::mt19937_64 &engine() { return rng_; }

private:
	std::mt19937_64 rng_;
};

inline AlgebraSpec sl2()
{
	// h, e, f
	AlgebraSpec a(3);
	a.set_bracket(0, 1, SparseVec::unit(1, 2));
	a.set_bracket(0, 2, SparseVec::unit(2, -2));
	a.set_bracket(1, 2, SparseVec::unit(0, 1));
	a.labels = {"h", "e", "f"};
	return a;
}

inline AlgebraSpec cross3()
{
	AlgebraSpec a(3);
	a.set_bracket(0, 1, SparseVec::unit(2));
	a.set_bracket(1, 2, SparseVec::unit(0));
	a.set_bracket(2, 0, SparseVec::unit(1));
	return a;
}

/// Same product and triple tables; labels and optional data are ignored.
inline bool same_tables(const AlgebraSpec &a, const AlgebraSpec &b)
{
	if (a.dim() != b.dim())
		return false;
	std::size_t n = a.dim();
	static const SparseVec zero;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (!(a.bil(i, j) == b.bil(i, j)))
				return false;
			for (std::size_t k = 0; k < n; ++k) {
				const SparseVec &x = a.has_tri() ? a.tri(i, j, k) : zero;
				const SparseVec &y = b.has_tri() ? b.tri(i, j, k) : zero;
				if (!(x == y))
					return false;
			}
		}
	return true;
}

} // namespace symlie::testing
