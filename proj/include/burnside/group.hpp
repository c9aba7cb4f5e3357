#ifndef BURNSIDE_GROUP_HPP
#define BURNSIDE_GROUP_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace burnside {

// Normal form a^i b^j c^k. For the abelian groups k (and j) stay zero.
struct GroupElement {
  int i = 0, j = 0, k = 0;
  bool operator==(const GroupElement& o) const { return i == o.i && j == o.j && k == o.k; }
};

enum class GroupKind { extraspecial, elementary_abelian, cyclic, trivial };

struct Subgroup {
  std::vector<int> elements;  // sorted element indices
  std::vector<char> member;   // indexed by element
  std::vector<int> gens;      // at most two generators
  bool contains(int x) const { return member[static_cast<std::size_t>(x)] != 0; }
  int order() const { return static_cast<int>(elements.size()); }
};

// A maximal elementary abelian subgroup with an ordered basis (g1, g2).
// Weight-one cohomology of the frame is spanned by the dual coordinates y, u.
struct Frame {
  int subgroup = 0;
  int rank = 0;
  int g1 = 0, g2 = 0;
  std::string label;
  std::vector<int> coord_y, coord_u;  // per element, -1 outside the frame
};

class Group {
 public:
  static std::shared_ptr<const Group> extraspecial(int p);
  static std::shared_ptr<const Group> elementary_abelian(int p);  // rank two
  static std::shared_ptr<const Group> cyclic(int p);
  static std::shared_ptr<const Group> trivial(int p);

  GroupKind kind() const { return kind_; }
  int p() const { return p_; }
  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int identity() const { return 0; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x * order_ + y)]; }
  int inv(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  int pow(int x, int e) const;
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  GroupElement element(int x) const { return elements_[static_cast<std::size_t>(x)]; }
  int index(const GroupElement& e) const;

  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& subgroup(int s) const { return subgroups_[static_cast<std::size_t>(s)]; }
  int whole() const { return whole_; }
  int trivial_subgroup() const { return trivial_sub_; }
  int center() const { return center_; }
  int find_subgroup(const std::vector<char>& member) const;
  int closure(const std::vector<int>& gens) const;  // subgroup index
  bool is_abelian_subgroup(int s) const;
  // x K x^-1
  int conjugate_subgroup(int x, int s) const;

  const std::vector<Frame>& frames() const { return frames_; }
  // Frame whose subgroup is s, or -1.
  int frame_of_subgroup(int s) const;
  // First frame containing every listed element, or -1.
  int frame_containing(const std::vector<int>& elems) const;

 private:
  Group(GroupKind kind, int p);
  void build_subgroups();
  void build_frames();

  GroupKind kind_;
  int p_;
  int order_ = 1;
  std::string name_;
  std::vector<GroupElement> elements_;
  std::vector<int> lookup_;  // i + p j + p^2 k -> index
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Subgroup> subgroups_;
  std::vector<Frame> frames_;
  int whole_ = 0, trivial_sub_ = 0, center_ = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

// Homomorphism from a subgroup of src into dst.
struct Hom {
  const Group* src = nullptr;
  const Group* dst = nullptr;
  int domain = 0;             // subgroup index in src
  std::vector<int> img;       // img[x] for x in the domain, -1 elsewhere
  int image = 0;              // subgroup index in dst
  int kernel_order = 1;

  int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }
  bool injective() const { return kernel_order == 1; }
  bool operator==(const Hom& o) const { return src == o.src && dst == o.dst && domain == o.domain && img == o.img; }
};

// Extends generator images along the Cayley graph; nullopt if some relation fails.
std::optional<Hom> hom_from_generators(const Group& src, int domain, const Group& dst,
                                       const std::vector<int>& gen_images);
// Wraps an explicit image table (entries outside the domain are ignored).
Hom make_hom(const Group& src, int domain, const Group& dst, std::vector<int> img);
std::vector<Hom> enumerate_homs(const Group& src, int domain, const Group& dst);
// Full multiplication-table check.
bool is_homomorphism(const Hom& h);
// f after g; g's image must lie in f's domain.
Hom compose(const Hom& f, const Hom& g);
Hom restrict_hom(const Hom& h, int sub);
Hom inclusion(const Group& g, int sub);
Hom conjugation(const Group& g, int x, int sub);  // k -> x k x^-1 on sub
Hom trivial_hom(const Group& src, int domain, const Group& dst);

// GL_2(F_p) element (alpha beta / gamma delta), acting on column vectors.
struct Mat2 {
  int a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Mat2& o) const;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y, int p);
int mat2_det(const Mat2& x, int p);
Mat2 mat2_inv(const Mat2& x, int p);
std::vector<Mat2> gl2_elements(int p);
int gl2_index(const Mat2& m, int p);  // position in gl2_elements(p)
// diag(w,1) with w a primitive root, and (-1 1 / -1 0); together they generate GL_2(F_p).
std::array<Mat2, 2> gl2_generators(int p);
int primitive_root(int p);

// Automorphism with g(a)=a^alpha b^gamma, g(b)=a^beta b^delta.
Hom out_lift(const Group& e, const Mat2& g);
// Action induced on E/Z, or on the standalone rank-two group.
Mat2 induced_matrix(const Hom& aut);
bool is_inner(const Hom& aut);

}  // namespace burnside

#endif
