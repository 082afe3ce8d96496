#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minion
{

/*! \brief Largest supported arity; every table fits one 64-bit word. */
inline constexpr unsigned max_arity = 6;

class arity_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail
{

/* low 2^n bits set */
constexpr uint64_t length_mask( unsigned n )
{
  return n >= 6u ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( 1u << n ) ) - 1u );
}

/* rows whose index has bit p set */
inline constexpr std::array<uint64_t, 6> row_bit_mask = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

inline uint64_t reverse_bits( uint64_t x )
{
  x = ( ( x >> 1 ) & 0x5555555555555555ull ) | ( ( x & 0x5555555555555555ull ) << 1 );
  x = ( ( x >> 2 ) & 0x3333333333333333ull ) | ( ( x & 0x3333333333333333ull ) << 2 );
  x = ( ( x >> 4 ) & 0x0f0f0f0f0f0f0f0full ) | ( ( x & 0x0f0f0f0f0f0f0f0full ) << 4 );
  return __builtin_bswap64( x );
}

inline void check_arity( unsigned n, const char* what )
{
  if ( n < 1u || n > max_arity )
  {
    throw arity_error( std::string( what ) + ": arity " + std::to_string( n ) + " outside 1.." + std::to_string( max_arity ) );
  }
}

} // namespace detail

/*! \brief An n-ary Boolean function as 2^n output bits.

  Bit i holds f(a) where a_1 is the most significant digit of i.
  Equality is table identity at fixed arity.
*/
class truth_table
{
public:
  truth_table() = default;

  truth_table( unsigned arity, uint64_t bits )
      : arity_( static_cast<uint8_t>( arity ) ), bits_( bits & detail::length_mask( arity ) )
  {
    detail::check_arity( arity, "truth_table" );
  }

  unsigned arity() const noexcept { return arity_; }
  uint64_t bits() const noexcept { return bits_; }
  unsigned num_rows() const noexcept { return 1u << arity_; }
  uint64_t mask() const noexcept { return detail::length_mask( arity_ ); }

  bool operator[]( uint64_t row ) const noexcept { return ( bits_ >> row ) & 1u; }

  bool at_zero() const noexcept { return bits_ & 1u; }
  bool at_one() const noexcept { return ( bits_ >> ( num_rows() - 1u ) ) & 1u; }
  unsigned count_ones() const noexcept { return static_cast<unsigned>( std::popcount( bits_ ) ); }

  friend bool operator==( const truth_table&, const truth_table& ) = default;
  friend auto operator<=>( const truth_table& a, const truth_table& b )
  {
    if ( auto c = a.arity_ <=> b.arity_; c != 0 )
      return c;
    return a.bits_ <=> b.bits_;
  }

private:
  uint8_t arity_ = 1;
  uint64_t bits_ = 0;
};

/*! \brief A map sigma: {1..n} -> {1..m}; image entries are 1-based. */
class arg_map
{
public:
  arg_map( std::vector<unsigned> image, unsigned target_arity )
      : image_( std::move( image ) ), target_arity_( target_arity )
  {
    if ( image_.empty() )
      throw arity_error( "arg_map: empty source" );
    for ( auto v : image_ )
    {
      if ( v < 1u || v > target_arity_ )
        throw arity_error( "arg_map: image entry " + std::to_string( v ) + " outside 1.." + std::to_string( target_arity_ ) );
    }
  }

  unsigned source_arity() const noexcept { return static_cast<unsigned>( image_.size() ); }
  unsigned target_arity() const noexcept { return target_arity_; }
  const std::vector<unsigned>& image() const noexcept { return image_; }
  unsigned operator()( unsigned i ) const { return image_.at( i - 1u ); }

  /*! \brief Identity map on {1..n}. */
  static arg_map identity( unsigned n )
  {
    std::vector<unsigned> img( n );
    for ( unsigned i = 0; i < n; ++i )
      img[i] = i + 1u;
    return arg_map( std::move( img ), n );
  }

  friend bool operator==( const arg_map&, const arg_map& ) = default;

private:
  std::vector<unsigned> image_;
  unsigned target_arity_;
};

/*! \brief Map composition: result(i) = tau(sigma(i)). */
inline arg_map then( const arg_map& sigma, const arg_map& tau )
{
  if ( sigma.target_arity() != tau.source_arity() )
    throw arity_error( "arg_map composition: arity mismatch" );
  std::vector<unsigned> img( sigma.source_arity() );
  for ( unsigned i = 1; i <= sigma.source_arity(); ++i )
    img[i - 1] = tau( sigma( i ) );
  return arg_map( std::move( img ), tau.target_arity() );
}

/*! \brief Calls `fn` on every map {1..n} -> {1..m} in lexicographic order of images. */
template<typename Fn>
void for_each_arg_map( unsigned n, unsigned m, Fn&& fn )
{
  std::vector<unsigned> img( n, 1u );
  while ( true )
  {
    fn( arg_map( img, m ) );
    int i = static_cast<int>( n ) - 1;
    while ( i >= 0 && img[i] == m )
      img[i--] = 1u;
    if ( i < 0 )
      return;
    ++img[i];
  }
}

/*! \name Constructors for common functions */
///@{
inline truth_table constant( unsigned n, bool value )
{
  return truth_table( n, value ? ~uint64_t( 0 ) : 0u );
}

/*! \brief i-th projection (1-based) at arity n. */
inline truth_table projection( unsigned n, unsigned i )
{
  detail::check_arity( n, "projection" );
  if ( i < 1u || i > n )
    throw arity_error( "projection: index out of range" );
  return truth_table( n, detail::row_bit_mask[n - i] );
}
///@}

/*! \brief Truth tables for the named functions of the toolkit.

  Accepted names: const0, const1, id, not, and, or, xor, iff, nimp, maj, xor3.
*/
inline const std::vector<std::pair<std::string_view, truth_table>>& named_functions()
{
  static const std::vector<std::pair<std::string_view, truth_table>> table = {
      { "const0", truth_table( 1, 0b00 ) },
      { "const1", truth_table( 1, 0b11 ) },
      { "id", truth_table( 1, 0b10 ) },
      { "not", truth_table( 1, 0b01 ) },
      { "and", truth_table( 2, 0b1000 ) },
      { "or", truth_table( 2, 0b1110 ) },
      { "xor", truth_table( 2, 0b0110 ) },
      { "iff", truth_table( 2, 0b1001 ) },
      { "nimp", truth_table( 2, 0b0100 ) },
      { "maj", truth_table( 3, 0b11101000 ) },
      { "xor3", truth_table( 3, 0b10010110 ) } };
  return table;
}

inline truth_table named_function( std::string_view name )
{
  for ( const auto& [n, t] : named_functions() )
  {
    if ( n == name )
      return t;
  }
  throw parse_error( "unknown function name: " + std::string( name ) );
}

inline uint64_t row_index( const std::vector<bool>& a )
{
  uint64_t r = 0;
  for ( bool b : a )
    r = ( r << 1 ) | ( b ? 1u : 0u );
  return r;
}

inline bool eval( const truth_table& f, const std::vector<bool>& a )
{
  if ( a.size() != f.arity() )
    throw arity_error( "eval: tuple length differs from arity" );
  return f[row_index( a )];
}

/*! \brief f_sigma(a) = f(a o sigma), an m-ary function. */
inline truth_table minor( const truth_table& f, const arg_map& sigma )
{
  if ( sigma.source_arity() != f.arity() )
    throw arity_error( "minor: map source arity differs from function arity" );
  const unsigned n = f.arity();
  const unsigned m = sigma.target_arity();
  detail::check_arity( m, "minor" );
  uint64_t out = 0;
  for ( uint64_t r = 0; r < ( uint64_t( 1 ) << m ); ++r )
  {
    uint64_t src = 0;
    for ( unsigned i = 1; i <= n; ++i )
      src = ( src << 1 ) | ( ( r >> ( m - sigma( i ) ) ) & 1u );
    out |= uint64_t( f[src] ) << r;
  }
  return truth_table( m, out );
}

/*! \brief f(g_1, ..., g_n) evaluated bit-parallel over the rows of the g_i. */
inline truth_table compose( const truth_table& f, const std::vector<truth_table>& gs )
{
  if ( gs.size() != f.arity() )
    throw arity_error( "compose: expected " + std::to_string( f.arity() ) + " inner functions" );
  const unsigned m = gs.front().arity();
  for ( const auto& g : gs )
  {
    if ( g.arity() != m )
      throw arity_error( "compose: inner functions differ in arity" );
  }
  const uint64_t mask = detail::length_mask( m );
  const unsigned n = f.arity();
  uint64_t out = 0;
  for ( uint64_t idx = 0; idx < f.num_rows(); ++idx )
  {
    if ( !f[idx] )
      continue;
    uint64_t term = mask;
    for ( unsigned i = 0; i < n; ++i )
      term &= ( ( idx >> ( n - 1u - i ) ) & 1u ) ? gs[i].bits() : ~gs[i].bits();
    out |= term;
  }
  return truth_table( m, out & mask );
}

/*! \brief (f * g)(a_1..a_{m+n-1}) = f(g(a_1..a_m), a_{m+1}, ..., a_{m+n-1}). */
inline truth_table star( const truth_table& f, const truth_table& g )
{
  const unsigned n = f.arity();
  const unsigned m = g.arity();
  const unsigned k = m + n - 1u;
  if ( k > max_arity )
    throw arity_error( "star: combined arity " + std::to_string( k ) + " exceeds " + std::to_string( max_arity ) );
  std::vector<unsigned> img( m );
  for ( unsigned i = 0; i < m; ++i )
    img[i] = i + 1u;
  std::vector<truth_table> inner;
  inner.reserve( n );
  inner.push_back( minor( g, arg_map( std::move( img ), k ) ) );
  for ( unsigned i = m + 1u; i <= k; ++i )
    inner.push_back( projection( k, i ) );
  return compose( f, inner );
}

inline truth_table negate( const truth_table& f )
{
  return truth_table( f.arity(), ~f.bits() );
}

/*! \brief f^n(a) = f(complement of a); reverses the row order. */
inline truth_table inner_negate( const truth_table& f )
{
  return truth_table( f.arity(), detail::reverse_bits( f.bits() ) >> ( 64u - f.num_rows() ) );
}

inline truth_table dual( const truth_table& f )
{
  return negate( inner_negate( f ) );
}

/*! \brief Pointwise majority of three tables of equal arity. */
inline truth_table maj3( const truth_table& f, const truth_table& g, const truth_table& h )
{
  if ( f.arity() != g.arity() || f.arity() != h.arity() )
    throw arity_error( "maj3: arities differ" );
  const auto a = f.bits(), b = g.bits(), c = h.bits();
  return truth_table( f.arity(), ( a & b ) | ( a & c ) | ( b & c ) );
}

/*! \brief The unary minor a -> f(a, ..., a). */
inline truth_table unary_collapse( const truth_table& f )
{
  return truth_table( 1, ( f.at_zero() ? 1u : 0u ) | ( f.at_one() ? 2u : 0u ) );
}

/*! \brief Arity cap for user input: the build cap, optionally lowered via MINION_MAX_ARITY. */
inline unsigned arity_cap_from_env()
{
  const char* env = std::getenv( "MINION_MAX_ARITY" );
  if ( env == nullptr || *env == '\0' )
    return max_arity;
  unsigned v = 0;
  std::string_view s( env );
  auto [p, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
  if ( ec != std::errc() || p != s.data() + s.size() || v < 1u || v > max_arity )
    throw arity_error( "MINION_MAX_ARITY must be an integer in 1.." + std::to_string( max_arity ) );
  return v;
}

/*! \brief Parses "n:bits" with bits listed from row 0 upwards. */
inline truth_table parse( std::string_view text, unsigned cap = max_arity )
{
  const auto colon = text.find( ':' );
  if ( colon == std::string_view::npos || colon == 0 )
    throw parse_error( "expected n:bits, got '" + std::string( text ) + "'" );
  unsigned n = 0;
  auto [p, ec] = std::from_chars( text.data(), text.data() + colon, n );
  if ( ec != std::errc() || p != text.data() + colon )
    throw parse_error( "bad arity in '" + std::string( text ) + "'" );
  if ( n < 1u || n > std::min( cap, max_arity ) )
    throw parse_error( "arity " + std::to_string( n ) + " out of range in '" + std::string( text ) + "'" );
  const auto body = text.substr( colon + 1 );
  if ( body.size() != ( std::size_t( 1 ) << n ) )
    throw parse_error( "expected " + std::to_string( 1u << n ) + " bits in '" + std::string( text ) + "'" );
  uint64_t bits = 0;
  for ( std::size_t i = 0; i < body.size(); ++i )
  {
    if ( body[i] == '1' )
      bits |= uint64_t( 1 ) << i;
    else if ( body[i] != '0' )
      throw parse_error( "non-binary digit in '" + std::string( text ) + "'" );
  }
  return truth_table( n, bits );
}

inline std::string format( const truth_table& f )
{
  std::string s = std::to_string( f.arity() ) + ':';
  for ( uint64_t r = 0; r < f.num_rows(); ++r )
    s.push_back( f[r] ? '1' : '0' );
  return s;
}

/*! \brief A set of truth tables of one arity, kept sorted by bits. */
class fn_set
{
public:
  using const_iterator = std::vector<truth_table>::const_iterator;

  explicit fn_set( unsigned arity ) : arity_( arity ) { detail::check_arity( arity, "fn_set" ); }

  fn_set( unsigned arity, std::vector<truth_table> members ) : fn_set( arity )
  {
    for ( const auto& f : members )
      check_member( f );
    std::sort( members.begin(), members.end() );
    members.erase( std::unique( members.begin(), members.end() ), members.end() );
    members_ = std::move( members );
  }

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<truth_table>& members() const noexcept { return members_; }

  bool contains( const truth_table& f ) const
  {
    return f.arity() == arity_ && std::binary_search( members_.begin(), members_.end(), f );
  }

  /*! \brief Inserts f; returns false if already present. */
  bool insert( const truth_table& f )
  {
    check_member( f );
    auto it = std::lower_bound( members_.begin(), members_.end(), f );
    if ( it != members_.end() && *it == f )
      return false;
    members_.insert( it, f );
    return true;
  }

  bool is_subset_of( const fn_set& other ) const
  {
    return arity_ == other.arity_ && std::includes( other.begin(), other.end(), begin(), end() );
  }

  friend bool operator==( const fn_set&, const fn_set& ) = default;

private:
  void check_member( const truth_table& f ) const
  {
    if ( f.arity() != arity_ )
      throw arity_error( "fn_set: member arity " + std::to_string( f.arity() ) + " differs from set arity " + std::to_string( arity_ ) );
  }

  unsigned arity_;
  std::vector<truth_table> members_;
};

/*! \brief All m-ary minors of f. */
inline fn_set all_minors( const truth_table& f, unsigned m )
{
  detail::check_arity( m, "all_minors" );
  std::vector<truth_table> out;
  for_each_arg_map( f.arity(), m, [&]( const arg_map& s ) { out.push_back( minor( f, s ) ); } );
  return fn_set( m, std::move( out ) );
}

/*! \brief Every table of arity m, in order of bits; m <= 4. */
template<typename Fn>
void for_each_table( unsigned m, Fn&& fn )
{
  if ( m < 1u || m > 4u )
    throw arity_error( "for_each_table: arity must be in 1..4" );
  const uint64_t count = uint64_t( 1 ) << ( 1u << m );
  for ( uint64_t b = 0; b < count; ++b )
    fn( truth_table( m, b ) );
}

} // namespace minion

template<>
struct std::hash<minion::truth_table>
{
  std::size_t operator()( const minion::truth_table& f ) const noexcept
  {
    return std::hash<uint64_t>{}( f.bits() * 8u + f.arity() );
  }
};
