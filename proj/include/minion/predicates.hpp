#pragma once

#include "truth_table.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace minion
{

/*! \brief Base properties from which every class in the toolkit is built. */
enum class prop_kind : uint8_t
{
  val0,                /*!< f(0...0) = param */
  val1,                /*!< f(1...1) = param */
  endpoints_eq,        /*!< f(0...0) = f(1...1) */
  endpoints_neq,       /*!< f(0...0) != f(1...1) */
  endpoints_leq,       /*!< f(0...0) <= f(1...1) */
  endpoints_geq,       /*!< f(0...0) >= f(1...1) */
  endpoints_meet_zero, /*!< f(0...0) and f(1...1) = 0 */
  endpoints_join_one,  /*!< f(0...0) or f(1...1) = 1 */
  monotone,
  self_dual,
  reflexive,           /*!< f(a) = f(complement a) */
  smin,                /*!< f(a) and f(complement a) = 0 */
  smaj,                /*!< f(a) or f(complement a) = 1 */
  sep1,                /*!< any param true points share a 1 */
  sep0,                /*!< any param false points share a 0 */
  constant,
  empty,
  all,
  projection
};

struct base_prop
{
  prop_kind kind;
  unsigned param = 0;

  friend bool operator==( const base_prop&, const base_prop& ) = default;
};

namespace detail
{

/* down_mask[c] has bit s set iff s is componentwise below c */
inline const std::array<uint64_t, 64>& down_masks()
{
  static const auto table = [] {
    std::array<uint64_t, 64> d{};
    for ( unsigned c = 0; c < 64; ++c )
      for ( unsigned s = 0; s < 64; ++s )
        if ( ( s & ~c ) == 0 )
          d[c] |= uint64_t( 1 ) << s;
    return d;
  }();
  return table;
}

inline bool is_monotone( const truth_table& f )
{
  const uint64_t b = f.bits();
  for ( unsigned p = 0; p < f.arity(); ++p )
  {
    const unsigned w = 1u << p;
    const uint64_t low = b & ~row_bit_mask[p];
    if ( ( low << w ) & ~b )
      return false;
  }
  return true;
}

inline bool sep1_pairwise( const truth_table& f )
{
  const auto& d = down_masks();
  const uint64_t top = f.num_rows() - 1u;
  uint64_t rest = f.bits();
  while ( rest )
  {
    const unsigned r = static_cast<unsigned>( std::countr_zero( rest ) );
    rest &= rest - 1u;
    if ( f.bits() & d[~r & top] )
      return false;
  }
  return true;
}

inline bool sep1_rank( const truth_table& f, unsigned k )
{
  if ( k == 2u )
    return sep1_pairwise( f );
  std::vector<unsigned> ones;
  for ( unsigned r = 0; r < f.num_rows(); ++r )
    if ( f[r] )
      ones.push_back( r );
  /* a zero meet of at most k true points is a violation (repeat points to pad) */
  auto rec = [&]( auto&& self, std::size_t from, unsigned depth, unsigned meet ) -> bool {
    if ( meet == 0u )
      return false;
    if ( depth == k )
      return true;
    for ( std::size_t i = from; i < ones.size(); ++i )
      if ( !self( self, i + 1, depth + 1u, meet & ones[i] ) )
        return false;
    return true;
  };
  return rec( rec, 0, 0u, f.num_rows() - 1u );
}

} // namespace detail

inline bool holds( const base_prop& p, const truth_table& f )
{
  const bool z = f.at_zero();
  const bool o = f.at_one();
  switch ( p.kind )
  {
  case prop_kind::val0: return z == ( p.param != 0u );
  case prop_kind::val1: return o == ( p.param != 0u );
  case prop_kind::endpoints_eq: return z == o;
  case prop_kind::endpoints_neq: return z != o;
  case prop_kind::endpoints_leq: return !z || o;
  case prop_kind::endpoints_geq: return z || !o;
  case prop_kind::endpoints_meet_zero: return !( z && o );
  case prop_kind::endpoints_join_one: return z || o;
  case prop_kind::monotone: return detail::is_monotone( f );
  case prop_kind::self_dual: return dual( f ) == f;
  case prop_kind::reflexive: return inner_negate( f ) == f;
  case prop_kind::smin: return ( f.bits() & inner_negate( f ).bits() ) == 0u;
  case prop_kind::smaj: return ( f.bits() | inner_negate( f ).bits() ) == f.mask();
  case prop_kind::sep1: return detail::sep1_rank( f, p.param );
  case prop_kind::sep0: return detail::sep1_rank( dual( f ), p.param );
  case prop_kind::constant: return f.bits() == 0u || f.bits() == f.mask();
  case prop_kind::empty: return false;
  case prop_kind::all: return true;
  case prop_kind::projection:
    for ( unsigned i = 1; i <= f.arity(); ++i )
      if ( f == projection( f.arity(), i ) )
        return true;
    return false;
  }
  return false;
}

inline std::string to_string( const base_prop& p )
{
  switch ( p.kind )
  {
  case prop_kind::val0: return "Val0(" + std::to_string( p.param ) + ")";
  case prop_kind::val1: return "Val1(" + std::to_string( p.param ) + ")";
  case prop_kind::endpoints_eq: return "EndpointsEq";
  case prop_kind::endpoints_neq: return "EndpointsNeq";
  case prop_kind::endpoints_leq: return "EndpointsLeq";
  case prop_kind::endpoints_geq: return "EndpointsGeq";
  case prop_kind::endpoints_meet_zero: return "EndpointsMeetZero";
  case prop_kind::endpoints_join_one: return "EndpointsJoinOne";
  case prop_kind::monotone: return "Monotone";
  case prop_kind::self_dual: return "SelfDual";
  case prop_kind::reflexive: return "Reflexive";
  case prop_kind::smin: return "SminProp";
  case prop_kind::smaj: return "SmajProp";
  case prop_kind::sep1: return "Sep1(" + std::to_string( p.param ) + ")";
  case prop_kind::sep0: return "Sep0(" + std::to_string( p.param ) + ")";
  case prop_kind::constant: return "Constant";
  case prop_kind::empty: return "Empty";
  case prop_kind::all: return "All";
  case prop_kind::projection: return "Projection";
  }
  return "?";
}

/*! \brief Expression tree over base properties.

  The image combinators test the transformed function: `neg_image(e)` holds of f
  iff e holds of the negation of f.
*/
class class_expr
{
public:
  enum class op : uint8_t
  {
    base,
    intersect,
    unite,
    neg_image,
    inner_neg_image,
    dual_image
  };

  class_expr( base_prop p ) : node_( std::make_shared<node>( node{ op::base, p, {} } ) ) {}
  class_expr( prop_kind k, unsigned param = 0 ) : class_expr( base_prop{ k, param } ) {}

  friend class_expr operator&( const class_expr& a, const class_expr& b ) { return combine( op::intersect, a, b ); }
  friend class_expr operator|( const class_expr& a, const class_expr& b ) { return combine( op::unite, a, b ); }

  friend class_expr neg_image( const class_expr& e ) { return image( op::neg_image, e ); }
  friend class_expr inner_neg_image( const class_expr& e ) { return image( op::inner_neg_image, e ); }
  friend class_expr dual_image( const class_expr& e ) { return image( op::dual_image, e ); }

  op kind() const noexcept { return node_->kind; }
  const base_prop& prop() const noexcept { return node_->prop; }
  const std::vector<class_expr>& children() const noexcept { return node_->children; }

  bool holds( const truth_table& f ) const
  {
    switch ( node_->kind )
    {
    case op::base: return minion::holds( node_->prop, f );
    case op::intersect:
      for ( const auto& c : node_->children )
        if ( !c.holds( f ) )
          return false;
      return true;
    case op::unite:
      for ( const auto& c : node_->children )
        if ( c.holds( f ) )
          return true;
      return false;
    case op::neg_image: return node_->children[0].holds( negate( f ) );
    case op::inner_neg_image: return node_->children[0].holds( inner_negate( f ) );
    case op::dual_image: return node_->children[0].holds( dual( f ) );
    }
    return false;
  }

  std::string to_string() const
  {
    switch ( node_->kind )
    {
    case op::base: return minion::to_string( node_->prop );
    case op::intersect:
    case op::unite:
    {
      std::string s;
      const char* sep = node_->kind == op::intersect ? " & " : " | ";
      for ( std::size_t i = 0; i < node_->children.size(); ++i )
      {
        const auto& c = node_->children[i];
        const bool paren = c.kind() == op::intersect || c.kind() == op::unite;
        if ( i )
          s += sep;
        s += paren ? "(" + c.to_string() + ")" : c.to_string();
      }
      return s;
    }
    case op::neg_image: return "neg(" + node_->children[0].to_string() + ")";
    case op::inner_neg_image: return "inner(" + node_->children[0].to_string() + ")";
    case op::dual_image: return "dual(" + node_->children[0].to_string() + ")";
    }
    return "?";
  }

private:
  struct node
  {
    op kind;
    base_prop prop;
    std::vector<class_expr> children;
  };

  explicit class_expr( std::shared_ptr<const node> n ) : node_( std::move( n ) ) {}

  static class_expr combine( op k, const class_expr& a, const class_expr& b )
  {
    std::vector<class_expr> ch;
    for ( const auto* e : { &a, &b } )
    {
      if ( e->kind() == k )
        ch.insert( ch.end(), e->children().begin(), e->children().end() );
      else
        ch.push_back( *e );
    }
    return class_expr( std::make_shared<node>( node{ k, {}, std::move( ch ) } ) );
  }

  static class_expr image( op k, const class_expr& e )
  {
    if ( e.kind() == k )
      return e.children()[0];
    return class_expr( std::make_shared<node>( node{ k, {}, { e } } ) );
  }

  std::shared_ptr<const node> node_;
};

/*! \brief One entry of the class roster. */
struct class_info
{
  std::string name;
  class_expr expr;
};

namespace detail
{

inline std::vector<class_info> build_roster()
{
  using K = prop_kind;
  const class_expr all( K::all ), mono( K::monotone ), sd( K::self_dual ), refl( K::reflexive );
  const class_expr smin( K::smin ), smaj( K::smaj ), u( K::sep1, 2 ), w( K::sep0, 2 );
  const class_expr vak( K::constant );
  const class_expr z0( K::val0, 0 ), z1( K::val0, 1 ), o0( K::val1, 0 ), o1( K::val1, 1 );
  const class_expr vak0 = vak & z0, vak1 = vak & z1;
  const class_expr e00 = z0 & o0, e01 = z0 & o1, e10 = z1 & o0, e11 = z1 & o1;
  const class_expr neq( K::endpoints_neq ), eq( K::endpoints_eq );

  const class_expr m0 = mono & z0, m1 = mono & o1, mc = mono & e01;
  const class_expr sm = sd & mono;
  const class_expr tcu = u & e01, tcw = w & e01;
  const class_expr tcw_c1 = tcw | vak1, w11 = w & e11;

  return {
      { "Omega", all },
      { "Omega_leq", class_expr( K::endpoints_leq ) },
      { "Omega_geq", class_expr( K::endpoints_geq ) },
      { "Omega_neq00", class_expr( K::endpoints_meet_zero ) },
      { "Omega_neq11", class_expr( K::endpoints_join_one ) },
      { "Omega_0x_c", z0 | vak },
      { "Omega_x0_c", o0 | vak },
      { "Omega_00_c", e00 | vak },
      { "Omega_01_c", e01 | vak },
      { "Omega_01_c0", e01 | vak0 },
      { "Omega_01_c1", e01 | vak1 },
      { "Omega_1x_c", z1 | vak },
      { "Omega_x1_c", o1 | vak },
      { "Omega_11_c", e11 | vak },
      { "Omega_10_c", e10 | vak },
      { "Omega_10_c1", e10 | vak1 },
      { "Omega_10_c0", e10 | vak0 },
      { "Omega_neq", neq },
      { "Omega_eq", eq },
      { "Omega_0x", z0 },
      { "Omega_1x", z1 },
      { "Omega_x0", o0 },
      { "Omega_x1", o1 },
      { "Omega_00", e00 },
      { "Omega_11", e11 },
      { "Omega_01", e01 },
      { "Omega_10", e10 },
      { "M", mono },
      { "M0", m0 },
      { "M1", m1 },
      { "Mc", mc },
      { "Mneg", neg_image( mono ) },
      { "M0neg", neg_image( m0 ) },
      { "M1neg", neg_image( m1 ) },
      { "Mcneg", neg_image( mc ) },
      { "Smin", smin },
      { "Smin_neq", smin & neq },
      { "Smin_0x", smin & z0 },
      { "Smin_x0", smin & o0 },
      { "Smin_01_c0", smin & ( e01 | vak0 ) },
      { "Smin_10_c0", smin & ( e10 | vak0 ) },
      { "Smin_01", smin & e01 },
      { "Smin_10", smin & e10 },
      { "Smin_00", smin & e00 },
      { "Smaj", smaj },
      { "Smaj_neq", smaj & neq },
      { "Smaj_1x", smaj & z1 },
      { "Smaj_x1", smaj & o1 },
      { "Smaj_10_c1", smaj & ( e10 | vak1 ) },
      { "Smaj_01_c1", smaj & ( e01 | vak1 ) },
      { "Smaj_10", smaj & e10 },
      { "Smaj_01", smaj & e01 },
      { "Smaj_11", smaj & e11 },
      { "S", sd },
      { "Sc", sd & e01 },
      { "Scneg", neg_image( sd & e01 ) },
      { "SM", sm },
      { "SMneg", neg_image( sm ) },
      { "U", u },
      { "TcU_c0", tcu | vak0 },
      { "TcU", tcu },
      { "MU", mono & u },
      { "McU", mono & tcu },
      { "U_00", u & e00 },
      { "Uneg", neg_image( u ) },
      { "TcUneg_c1", neg_image( tcu | vak0 ) },
      { "TcUneg", neg_image( tcu ) },
      { "MUneg", neg_image( mono & u ) },
      { "McUneg", neg_image( mono & tcu ) },
      { "Uneg_11", neg_image( u & e00 ) },
      { "W", w },
      { "TcW_c1", tcw_c1 },
      { "TcW", tcw },
      { "MW", mono & w },
      { "McW", mono & tcw },
      { "W_11", w11 },
      { "Wneg", neg_image( w ) },
      { "TcWneg_c0", neg_image( tcw_c1 ) },
      { "TcWneg", neg_image( tcw ) },
      { "MWneg", neg_image( mono & w ) },
      { "McWneg", neg_image( mono & tcw ) },
      { "Wneg_00", neg_image( w11 ) },
      { "U_Wneg", u & neg_image( w ) },
      { "W_Uneg", w & neg_image( u ) },
      { "Refl", refl },
      { "Refl_00_c", ( refl & e00 ) | vak },
      { "Refl_11_c", ( refl & e11 ) | vak },
      { "Refl_00", refl & e00 },
      { "Refl_11", refl & e11 },
      { "Vak", vak },
      { "Vak0", vak0 },
      { "Vak1", vak1 },
      { "Empty", class_expr( K::empty ) } };
}

} // namespace detail

/*! \brief The 93 classes, in the canonical order. */
inline const std::vector<class_info>& roster()
{
  static const std::vector<class_info> r = detail::build_roster();
  return r;
}

inline constexpr std::size_t roster_size = 93;

/*! \brief Index into the roster. */
class class_id
{
public:
  constexpr class_id() = default;
  explicit constexpr class_id( std::size_t index ) : index_( static_cast<uint8_t>( index ) ) {}

  static class_id from_name( std::string_view name )
  {
    const auto& r = roster();
    for ( std::size_t i = 0; i < r.size(); ++i )
      if ( r[i].name == name )
        return class_id( i );
    throw std::invalid_argument( "unknown class name: " + std::string( name ) );
  }

  static std::optional<class_id> find( std::string_view name )
  {
    const auto& r = roster();
    for ( std::size_t i = 0; i < r.size(); ++i )
      if ( r[i].name == name )
        return class_id( i );
    return std::nullopt;
  }

  constexpr std::size_t index() const noexcept { return index_; }
  const std::string& name() const { return roster()[index_].name; }
  const class_expr& expr() const { return roster()[index_].expr; }

  friend constexpr bool operator==( class_id, class_id ) = default;
  friend constexpr auto operator<=>( class_id, class_id ) = default;

private:
  uint8_t index_ = 0;
};

inline std::vector<class_id> all_classes()
{
  std::vector<class_id> v;
  for ( std::size_t i = 0; i < roster().size(); ++i )
    v.emplace_back( i );
  return v;
}

inline bool class_member( class_id c, const truth_table& f )
{
  return c.expr().holds( f );
}

/*! \brief Membership bitmap over all 2^(2^m) tables of arity m <= 4. */
class table_bitmap
{
public:
  explicit table_bitmap( unsigned arity )
      : arity_( arity ), words_( ( ( uint64_t( 1 ) << ( 1u << arity ) ) + 63u ) / 64u, 0u )
  {
    if ( arity < 1u || arity > 4u )
      throw arity_error( "table_bitmap: arity must be in 1..4" );
  }

  unsigned arity() const noexcept { return arity_; }
  bool test( uint64_t bits ) const noexcept { return ( words_[bits >> 6] >> ( bits & 63u ) ) & 1u; }
  bool test( const truth_table& f ) const noexcept { return f.arity() == arity_ && test( f.bits() ); }
  void set( uint64_t bits ) noexcept { words_[bits >> 6] |= uint64_t( 1 ) << ( bits & 63u ); }

  std::size_t count() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += static_cast<std::size_t>( std::popcount( w ) );
    return c;
  }

  bool is_subset_of( const table_bitmap& o ) const noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~o.words_[i] )
        return false;
    return true;
  }

  table_bitmap operator&( const table_bitmap& o ) const
  {
    table_bitmap r( *this );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      r.words_[i] &= o.words_[i];
    return r;
  }

  template<typename Fn>
  void for_each( Fn&& fn ) const
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      uint64_t w = words_[i];
      while ( w )
      {
        const uint64_t b = i * 64u + static_cast<unsigned>( std::countr_zero( w ) );
        w &= w - 1u;
        fn( truth_table( arity_, b ) );
      }
    }
  }

  fn_set to_fn_set() const
  {
    std::vector<truth_table> v;
    for_each( [&]( const truth_table& f ) { v.push_back( f ); } );
    return fn_set( arity_, std::move( v ) );
  }

  friend bool operator==( const table_bitmap&, const table_bitmap& ) = default;

private:
  unsigned arity_;
  std::vector<uint64_t> words_;
};

/*! \brief Cached membership bitmap of class c at arity m (1..4); thread-safe. */
inline const table_bitmap& class_bitmap( class_id c, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "class_bitmap: arity must be in 1..4" );
  static std::array<std::once_flag, 5> once;
  static std::array<std::vector<table_bitmap>, 5> cache;
  std::call_once( once[m], [m] {
    std::vector<table_bitmap> v( roster().size(), table_bitmap( m ) );
    for_each_table( m, [&]( const truth_table& f ) {
      for ( std::size_t i = 0; i < v.size(); ++i )
        if ( roster()[i].expr.holds( f ) )
          v[i].set( f.bits() );
    } );
    cache[m] = std::move( v );
  } );
  return cache[m][c.index()];
}

/*! \brief Membership via the cached bitmaps where available. */
inline bool class_member_fast( class_id c, const truth_table& f )
{
  return f.arity() <= 4u ? class_bitmap( c, f.arity() ).test( f.bits() ) : class_member( c, f );
}

/*! \brief All m-ary members of c, m <= 4. */
inline fn_set enumerate_class( class_id c, unsigned m )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "enumerate_class: arity must be in 1..4" );
  return class_bitmap( c, m ).to_fn_set();
}

} // namespace minion
