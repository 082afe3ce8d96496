#pragma once

#include "closure.hpp"
#include "lattice.hpp"

#include <map>

namespace minion
{

class hypothesis_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class not_bisectable_error : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/*! \brief Parses a bit-string tuple such as "110" (first entry most significant) into a row index. */
inline uint64_t parse_tuple( std::string_view s )
{
  if ( s.empty() || s.size() > 24u )
    throw parse_error( "tuple must have 1..24 entries: '" + std::string( s ) + "'" );
  uint64_t r = 0;
  for ( char c : s )
  {
    if ( c != '0' && c != '1' )
      throw parse_error( "non-binary tuple '" + std::string( s ) + "'" );
    r = ( r << 1 ) | uint64_t( c == '1' );
  }
  return r;
}

inline std::string format_tuple( uint64_t row, unsigned n )
{
  std::string s( n, '0' );
  for ( unsigned i = 0; i < n; ++i )
    if ( ( row >> ( n - 1u - i ) ) & 1u )
      s[i] = '1';
  return s;
}

/*! \name Classification */
///@{

/*! \brief All roster classes containing every member of F. */
inline std::vector<class_id> containing_classes( const std::vector<truth_table>& F )
{
  std::vector<class_id> out;
  for ( auto c : all_classes() )
  {
    bool ok = true;
    for ( const auto& f : F )
      if ( !( ok = class_member_fast( c, f ) ) )
        break;
    if ( ok )
      out.push_back( c );
  }
  return out;
}

struct classification
{
  class_id cls;
  unsigned checked_arity; /*!< closure oracle agreed for all arities up to this one */
};

/*! \brief Smallest containing class, confirmed against the closure oracle.

  Throws inconsistency_error if there is no unique minimum or the oracle disagrees.
*/
inline classification classify( const std::vector<truth_table>& F )
{
  const auto& l = default_lattice();
  const auto cands = containing_classes( F );
  std::optional<class_id> least;
  for ( auto c : cands )
  {
    bool below_all = true;
    for ( auto d : cands )
      below_all = below_all && l.leq( c, d );
    if ( below_all )
      least = c;
  }
  if ( !least )
    throw inconsistency_error( "no least containing class" );

  unsigned max_ar = 0;
  for ( const auto& f : F )
    max_ar = std::max( max_ar, f.arity() );
  const unsigned check = std::max( 1u, std::min( 3u, max_ar + 1u ) );
  for ( unsigned m = 1; m <= check; ++m )
  {
    if ( sm_closure( F, m ) != enumerate_class( *least, m ) )
      throw inconsistency_error( "closure oracle disagrees with class " + least->name() + " at arity " + std::to_string( m ) );
  }
  return { *least, check };
}

inline class_id generated_class( const std::vector<truth_table>& F )
{
  return classify( F ).cls;
}
///@}

/*! \brief One n-ary minor of a generator, tagged with its origin. */
struct phi_entry
{
  std::size_t gen_index;
  arg_map sigma;
  truth_table table;
};

/*! \brief The distinct n-ary minors of G, ordered by generator index then map; first occurrence kept. */
inline std::vector<phi_entry> minor_family( const std::vector<truth_table>& G, unsigned n )
{
  std::vector<phi_entry> out;
  std::unordered_set<uint64_t> seen;
  for ( std::size_t i = 0; i < G.size(); ++i )
    for_each_arg_map( G[i].arity(), n, [&]( const arg_map& s ) {
      auto t = minor( G[i], s );
      if ( seen.insert( t.bits() ).second )
        out.push_back( { i, s, t } );
    } );
  return out;
}

/*! \name Bisectability */
///@{
struct pair_witness
{
  char condition; /*!< 'A' true/true, 'B' false/false, 'C' true/false */
  uint64_t a;
  uint64_t b;
  std::size_t tau; /*!< index into the minor family; npos when none exists */
};

struct bisect_result
{
  bool bisectable = true;
  std::vector<phi_entry> family;
  std::vector<pair_witness> witnesses;
  std::optional<pair_witness> failure;
};

inline bisect_result is_bisectable( const truth_table& f, const std::vector<truth_table>& G )
{
  bisect_result res;
  res.family = minor_family( G, f.arity() );
  std::vector<uint64_t> ones, zeros;
  for ( uint64_t r = 0; r < f.num_rows(); ++r )
    ( f[r] ? ones : zeros ).push_back( r );

  auto find = [&]( uint64_t a, bool va, uint64_t b, bool vb ) -> std::size_t {
    for ( std::size_t t = 0; t < res.family.size(); ++t )
      if ( res.family[t].table[a] == va && res.family[t].table[b] == vb )
        return t;
    return std::string::npos;
  };
  auto record = [&]( char cond, uint64_t a, bool va, uint64_t b, bool vb ) {
    const auto t = find( a, va, b, vb );
    if ( t == std::string::npos )
    {
      res.bisectable = false;
      res.failure = pair_witness{ cond, a, b, t };
      return false;
    }
    res.witnesses.push_back( { cond, a, b, t } );
    return true;
  };

  for ( std::size_t i = 0; i < ones.size(); ++i )
    for ( std::size_t j = i; j < ones.size(); ++j )
      if ( !record( 'A', ones[i], true, ones[j], true ) )
        return res;
  for ( std::size_t i = 0; i < zeros.size(); ++i )
    for ( std::size_t j = i; j < zeros.size(); ++j )
      if ( !record( 'B', zeros[i], false, zeros[j], false ) )
        return res;
  for ( auto a : ones )
    for ( auto b : zeros )
      if ( !record( 'C', a, true, b, false ) )
        return res;
  return res;
}
///@}

/*! \brief Dynamically sized truth table for the outer function of a decomposition. */
class wide_table
{
public:
  static constexpr unsigned max_arity = 24;

  explicit wide_table( unsigned arity ) : arity_( arity )
  {
    if ( arity < 1u || arity > max_arity )
      throw arity_error( "wide_table: arity " + std::to_string( arity ) + " outside 1.." + std::to_string( max_arity ) );
    words_.assign( std::max<uint64_t>( 1u, ( uint64_t( 1 ) << arity ) / 64u ), 0u );
  }

  unsigned arity() const noexcept { return arity_; }
  uint64_t num_rows() const noexcept { return uint64_t( 1 ) << arity_; }
  bool operator[]( uint64_t r ) const noexcept { return ( words_[r >> 6] >> ( r & 63u ) ) & 1u; }
  void set( uint64_t r ) noexcept { words_[r >> 6] |= uint64_t( 1 ) << ( r & 63u ); }
  std::vector<uint64_t>& words() noexcept { return words_; }
  const std::vector<uint64_t>& words() const noexcept { return words_; }

  uint64_t count_ones() const noexcept
  {
    uint64_t c = 0;
    for ( auto w : words_ )
      c += static_cast<uint64_t>( std::popcount( w ) );
    return c;
  }

  std::optional<truth_table> narrow() const
  {
    if ( arity_ > minion::max_arity )
      return std::nullopt;
    return truth_table( arity_, words_[0] );
  }

  std::string format() const
  {
    std::string s = std::to_string( arity_ ) + ':';
    for ( uint64_t r = 0; r < num_rows(); ++r )
      s.push_back( ( *this )[r] ? '1' : '0' );
    return s;
  }

  /*! \brief Self-dual and monotone. */
  bool in_sm() const
  {
    const uint64_t top = num_rows() - 1u;
    for ( uint64_t r = 0; r < num_rows(); ++r )
    {
      if ( ( *this )[r] == ( *this )[~r & top] )
        return false;
      for ( unsigned p = 0; p < arity_; ++p )
        if ( ( *this )[r] && !( ( r >> p ) & 1u ) && !( *this )[r | ( uint64_t( 1 ) << p )] )
          return false;
    }
    return true;
  }

private:
  unsigned arity_;
  std::vector<uint64_t> words_;
};

/*! \brief Required true and false points; tuples are row indices with a_1 most significant. */
struct point_sets
{
  unsigned n;
  std::vector<uint64_t> T;
  std::vector<uint64_t> F;
};

namespace detail
{

inline void check_point_sets( const point_sets& ps )
{
  if ( ps.n < 1u || ps.n > wide_table::max_arity )
    throw arity_error( "point sets: n outside 1.." + std::to_string( wide_table::max_arity ) );
  const uint64_t top = ( uint64_t( 1 ) << ps.n ) - 1u;
  for ( auto x : ps.T )
    if ( x > top )
      throw arity_error( "point sets: tuple longer than n" );
  for ( auto x : ps.F )
    if ( x > top )
      throw arity_error( "point sets: tuple longer than n" );
  auto fail = [&]( const char* what, uint64_t a, uint64_t b ) {
    throw hypothesis_error( std::string( what ) + ": " + format_tuple( a, ps.n ) + ", " + format_tuple( b, ps.n ) );
  };
  for ( auto u : ps.T )
    for ( auto v : ps.T )
      if ( ( u & v ) == 0u )
        fail( "true points without a common 1", u, v );
  for ( auto u : ps.F )
    for ( auto v : ps.F )
      if ( ( u | v ) == top )
        fail( "false points without a common 0", u, v );
  for ( auto u : ps.T )
    for ( auto v : ps.F )
      if ( ( u & ~v ) == 0u )
        fail( "true point below false point", u, v );
}

inline void up_close( wide_table& s )
{
  auto& w = s.words();
  const unsigned n = s.arity();
  for ( unsigned p = 0; p < n; ++p )
  {
    if ( p < 6u )
    {
      const uint64_t mask = n >= 6u ? ~uint64_t( 0 ) : length_mask( n );
      for ( auto& x : w )
        x = ( x | ( ( x & ~row_bit_mask[p] ) << ( 1u << p ) ) ) & mask;
    }
    else
    {
      const std::size_t stride = std::size_t( 1 ) << ( p - 6u );
      for ( std::size_t i = 0; i < w.size(); ++i )
        if ( !( i & stride ) )
          w[i | stride] |= w[i];
    }
  }
}

} // namespace detail

/*! \brief A self-dual monotone function that is 1 on T and 0 on F, as a wide table.

  Starts from the up-closure of T and the complements of F, then walks tuples
  from the largest index down, adding each one whose complement is not yet
  chosen. The first such tuple is always the greatest maximal element of the
  undecided region, so each step extends an upset.
*/
inline wide_table extend_sm_wide( const point_sets& ps )
{
  detail::check_point_sets( ps );
  const uint64_t top = ( uint64_t( 1 ) << ps.n ) - 1u;
  wide_table s( ps.n );
  for ( auto u : ps.T )
    s.set( u );
  for ( auto v : ps.F )
    s.set( ~v & top );
  detail::up_close( s );
  for ( uint64_t r = top + 1u; r-- > 0; )
    if ( !s[r] && !s[~r & top] )
      s.set( r );
  return s;
}

inline truth_table extend_sm( const point_sets& ps )
{
  if ( ps.n > max_arity )
    throw arity_error( "extend_sm: n above " + std::to_string( max_arity ) + "; use extend_sm_wide" );
  return *extend_sm_wide( ps ).narrow();
}

/*! \brief f = h(phi_1, ..., phi_N) with h self-dual monotone and the phi_i minors of G. */
struct decomposition
{
  wide_table h;
  std::vector<phi_entry> phis;
};

/*! \brief Evaluates h(phi_1..phi_N) as an n-ary table. */
inline truth_table replay( const decomposition& d, unsigned n )
{
  const auto N = d.phis.size();
  uint64_t out = 0;
  for ( uint64_t r = 0; r < ( uint64_t( 1 ) << n ); ++r )
  {
    uint64_t idx = 0;
    for ( std::size_t i = 0; i < N; ++i )
      idx = ( idx << 1 ) | uint64_t( d.phis[i].table[r] );
    out |= uint64_t( d.h[idx] ) << r;
  }
  return truth_table( n, out );
}

inline decomposition sm_decompose( const truth_table& f, const std::vector<truth_table>& G )
{
  auto b = is_bisectable( f, G );
  if ( !b.bisectable )
    throw not_bisectable_error( "function is not bisectable by the given generators (condition " +
                                std::string( 1, b.failure->condition ) + " fails at " + format_tuple( b.failure->a, f.arity() ) +
                                ", " + format_tuple( b.failure->b, f.arity() ) + ")" );
  const auto N = static_cast<unsigned>( b.family.size() );
  if ( N > wide_table::max_arity )
    throw budget_error( "sm_decompose: " + std::to_string( N ) + " minors exceed the outer arity cap of " +
                        std::to_string( wide_table::max_arity ) );
  point_sets ps{ N, {}, {} };
  for ( uint64_t r = 0; r < f.num_rows(); ++r )
  {
    uint64_t idx = 0;
    for ( const auto& p : b.family )
      idx = ( idx << 1 ) | uint64_t( p.table[r] );
    ( f[r] ? ps.T : ps.F ).push_back( idx );
  }
  decomposition d{ extend_sm_wide( ps ), std::move( b.family ) };
  if ( replay( d, f.arity() ) != f || !d.h.in_sm() )
    throw inconsistency_error( "sm_decompose: replay failed" );
  return d;
}

/*! \brief First map sigma (lexicographic) whose minor matches every prescribed row value. */
inline std::optional<arg_map> minor_search( const truth_table& f, const std::map<uint64_t, bool>& spec, unsigned m )
{
  detail::check_arity( m, "minor_search" );
  for ( const auto& [row, v] : spec )
    if ( row >= ( uint64_t( 1 ) << m ) )
      throw arity_error( "minor_search: prescribed tuple longer than target arity" );
  std::vector<unsigned> img( f.arity(), 1u );
  while ( true )
  {
    arg_map s( img, m );
    const auto g = minor( f, s );
    bool ok = true;
    for ( const auto& [row, v] : spec )
      if ( g[row] != v )
      {
        ok = false;
        break;
      }
    if ( ok )
      return s;
    int i = static_cast<int>( img.size() ) - 1;
    while ( i >= 0 && img[i] == m )
      img[i--] = 1u;
    if ( i < 0 )
      return std::nullopt;
    ++img[i];
  }
}

} // namespace minion
