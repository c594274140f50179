#include "liecheck/catalog.hpp"

namespace liecheck {

namespace {

long long dim_sp(long long two_k) {  // Sp(2k, R): k(2k+1)
  const long long k = two_k / 2;
  return k * (2 * k + 1);
}
long long dim_o(long long m) { return m * (m - 1) / 2; }
long long dim_u(long long n) { return n * n; }
long long dim_ostar(long long two_m) {  // O*(2m): m(2m-1)
  const long long m = two_m / 2;
  return m * (2 * m - 1);
}

}  // namespace

std::vector<CosetDimItem> coset_dim_report(int d, int n) {
  if (n < 1) throw std::invalid_argument("coset_dim_report: n must be >= 1");
  std::vector<CosetDimItem> out;
  switch (d) {
    case 2: {
      // Big algebra osp(4|2N) over su(1,1|N) + u(1).
      out.push_back({"bosonic coset Sp(4)/(SU(1,1)+U(1))",
                     dim_sp(4) - (3 + 1), 6});
      out.push_back({"bosonic coset O(2N)/U(N)",
                     dim_o(2LL * n) - dim_u(n),
                     static_cast<long long>(n) * n - n});
      out.push_back({"fermionic coset osp(4|2N)/su(1,1|N)",
                     4LL * (2 * n) - 4LL * n, 4LL * n});
      break;
    }
    case 4: {
      // Exceptional family over osp(4*|2).
      out.push_back({"fermionic coset F(4;2)/OSp(4*|2)", 16 - 4 * 2, 8});
      out.push_back({"bosonic coset (O(5,2)+O(3))/(O(2,1)+O(4))",
                     (dim_o(7) + dim_o(3)) - (dim_o(3) + dim_o(4)), 15});
      break;
    }
    case 5: {
      // osp(8*|4n) over osp(4*|4n); the symplectic factor cancels.
      out.push_back({"fermionic coset OSp(8*|4n)/OSp(4*|4n)",
                     8LL * 4 * n - 4LL * 4 * n, 16LL * n});
      out.push_back({"bosonic coset O*(8)/O*(4)",
                     dim_ostar(8) - dim_ostar(4), 22});
      break;
    }
    default:
      throw std::invalid_argument("coset_dim_report: d must be 2, 4 or 5");
  }
  return out;
}

}  // namespace liecheck
