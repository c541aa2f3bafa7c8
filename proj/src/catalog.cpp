#include "davlab/catalog.hpp"

namespace davlab {

std::vector<CatalogEntry> catalog(bool full) {
  using CK = ConstantKind;
  std::vector<CatalogEntry> out;
  auto add = [&](GroupSpec spec, CK kind, long long expected,
                 std::string source, int k = 1, bool full_only = false) {
    out.push_back({std::move(spec), kind, k, expected, std::move(source),
                   full_only});
  };

  for (long long n = 1; n <= 10; ++n) {
    add(GroupSpec::cyclic(n), CK::D, n, "d(Z_n) = n");
    add(GroupSpec::cyclic(n), CK::E, n, "d = e = f for abelian groups");
    add(GroupSpec::cyclic(n), CK::F, n, "d = e = f for abelian groups");
  }
  for (auto ns : {std::vector<long long>{2, 2}, {2, 4}, {3, 3}}) {
    long long m = 1;
    for (auto n : ns) m += n - 1;
    add(GroupSpec::direct_product(ns), CK::D, m, "d(G) = M(G), rank <= 2");
    add(GroupSpec::direct_product(ns), CK::E, m, "d = e = f for abelian groups");
    add(GroupSpec::direct_product(ns), CK::F, m, "d = e = f for abelian groups");
  }

  for (long long n = 3; n <= 6; ++n) {
    add(GroupSpec::dihedral(n), CK::D, n + 1, "d(D_2n) = n+1");
    add(GroupSpec::dihedral(n), CK::E, n, "e(D_2n) = n");
    add(GroupSpec::dihedral(n), CK::F, n, "f(D_2n) = n");
  }
  for (long long n = 2; n <= 3; ++n) {
    add(GroupSpec::dicyclic(n), CK::D, 2 * n + 1, "d(Q_4n) = 2n+1");
    add(GroupSpec::dicyclic(n), CK::E, 2 * n, "e(Q_4n) = 2n");
    add(GroupSpec::dicyclic(n), CK::F, 2 * n, "f(Q_4n) = 2n");
  }

  add(GroupSpec::metacyclic(2, 3, 2), CK::D, 4, "d(Z_p x| Z_n) = n+p-1");
  add(GroupSpec::metacyclic(2, 3, 2), CK::F, 3, "f(Z_p x| Z_n) = n");
  add(GroupSpec::metacyclic(2, 4, 3), CK::D, 5,
      "d(Z_m x| Z_mn) = mn+m-1 (Han-Zhang), coincides with D_8");
  add(GroupSpec::metacyclic(2, 4, 3), CK::F, 4, "f(Z_p x| Z_n) = n");

  add(GroupSpec::dihedral(3), CK::Dk, 7, "d_k(D_2n) = nk+1", 2);
  add(GroupSpec::dihedral(4), CK::Dk, 9, "d_k(D_2n) = nk+1", 2);
  add(GroupSpec::dicyclic(2), CK::Dk, 9, "d_k(Q_4n) = 2nk+1", 2);

  add(GroupSpec::holomorph_prime(3), CK::D, 4, "Hol(Z_3) = D_6");
  add(GroupSpec::holomorph_prime(3), CK::E, 3, "Hol(Z_3) = D_6");
  add(GroupSpec::holomorph_prime(3), CK::F, 3, "Hol(Z_3) = D_6");

  // slower rows
  add(GroupSpec::metacyclic(3, 7, 2), CK::D, 9, "d(Z_p x| Z_n) = n+p-1", 1,
      true);
  add(GroupSpec::metacyclic(3, 7, 2), CK::F, 7, "f(Z_p x| Z_n) = n", 1, true);
  add(GroupSpec::holomorph_prime(5), CK::D, 8, "d(Hol(Z_5)) = 8", 1, true);
  add(GroupSpec::holomorph_prime(5), CK::E, 6, "e(Hol(Z_5)) = 6", 1, true);
  add(GroupSpec::holomorph_prime(5), CK::F, 5, "f(Hol(Z_5)) = 5", 1, true);

  if (!full) {
    std::erase_if(out, [](const CatalogEntry& e) { return e.full_tier_only; });
  }
  return out;
}

}  // namespace davlab
