#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symlie {

/// Raised when a construction is refused because its input fails verification.
class VerificationError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Outcome of checking one identity over basis tuples.
struct IdentityCheck {
	static constexpr std::size_t max_witnesses = 64;

	std::string name;
	std::size_t tested = 0;
	std::size_t violations = 0;
	/// First few violating basis tuples, in enumeration order.
	std::vector<std::vector<std::size_t>> witnesses;

	bool ok() const { return violations == 0; }

	void fail(std::vector<std::size_t> tuple)
	{
		++violations;
		if (witnesses.size() < max_witnesses)
			witnesses.push_back(std::move(tuple));
	}

	void merge(const IdentityCheck &o)
	{
		tested += o.tested;
		violations += o.violations;
		for (const auto &w : o.witnesses)
			if (witnesses.size() < max_witnesses)
				witnesses.push_back(w);
	}
};

inline bool all_ok(const std::vector<IdentityCheck> &checks)
{
	for (const auto &c : checks)
		if (!c.ok())
			return false;
	return true;
}

} // namespace symlie
