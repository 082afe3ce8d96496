#include "oracles.hpp"

#include <minion/truth_table.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace minion;

namespace
{

truth_table T( const char* s )
{
  return parse( s );
}

} // namespace

TEST( TruthTable, NamedFunctionTables )
{
  EXPECT_EQ( format( named_function( "id" ) ), "1:01" );
  EXPECT_EQ( format( named_function( "not" ) ), "1:10" );
  EXPECT_EQ( format( named_function( "const0" ) ), "1:00" );
  EXPECT_EQ( format( named_function( "const1" ) ), "1:11" );
  EXPECT_EQ( format( named_function( "and" ) ), "2:0001" );
  EXPECT_EQ( format( named_function( "or" ) ), "2:0111" );
  EXPECT_EQ( format( named_function( "xor" ) ), "2:0110" );
  EXPECT_EQ( format( named_function( "iff" ) ), "2:1001" );
  EXPECT_EQ( format( named_function( "nimp" ) ), "2:0010" );
  EXPECT_EQ( format( named_function( "maj" ) ), "3:00010111" );
  EXPECT_EQ( format( named_function( "xor3" ) ), "3:01101001" );
  EXPECT_THROW( named_function( "nand" ), parse_error );
}

TEST( TruthTable, NamedFunctionsMatchDefinitions )
{
  using oracle::tuple;
  auto check = [&]( const char* name, unsigned n, auto fn ) {
    EXPECT_EQ( named_function( name ), oracle::tabulate( n, fn ) ) << name;
  };
  check( "and", 2, []( const tuple& a ) { return a[0] && a[1]; } );
  check( "or", 2, []( const tuple& a ) { return a[0] || a[1]; } );
  check( "xor", 2, []( const tuple& a ) { return a[0] != a[1]; } );
  check( "iff", 2, []( const tuple& a ) { return a[0] == a[1]; } );
  check( "nimp", 2, []( const tuple& a ) { return a[0] && !a[1]; } );
  check( "maj", 3, []( const tuple& a ) { return a[0] + a[1] + a[2] >= 2; } );
  check( "xor3", 3, []( const tuple& a ) { return ( a[0] + a[1] + a[2] ) % 2 == 1; } );
}

TEST( TruthTable, Eval )
{
  EXPECT_TRUE( eval( named_function( "maj" ), { 0, 1, 1 } ) );
  EXPECT_FALSE( eval( named_function( "and" ), { 0, 0 } ) );
  EXPECT_TRUE( eval( named_function( "id" ), { 1 } ) );
  EXPECT_THROW( eval( named_function( "and" ), { 1 } ), arity_error );
}

TEST( TruthTable, MinorExamples )
{
  EXPECT_EQ( minor( named_function( "and" ), arg_map( { 1, 1 }, 1 ) ), T( "1:01" ) );
  EXPECT_EQ( minor( named_function( "maj" ), arg_map( { 1, 1, 2 }, 2 ) ), T( "2:0011" ) );
  EXPECT_EQ( minor( named_function( "nimp" ), arg_map( { 2, 1 }, 2 ) ), T( "2:0100" ) );
  EXPECT_EQ( minor( named_function( "nimp" ), arg_map( { 2, 1 }, 2 ) ), oracle::minor( named_function( "nimp" ), { 2, 1 }, 2 ) );
  EXPECT_THROW( minor( named_function( "and" ), arg_map( { 1 }, 1 ) ), arity_error );
  EXPECT_THROW( arg_map( { 3 }, 2 ), arity_error );
}

TEST( TruthTable, MinorAgreesWithOracleExhaustively )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( uint64_t b = 0; b < ( uint64_t( 1 ) << ( 1u << n ) ); ++b )
    {
      const truth_table f( n, b );
      for ( unsigned m = 1; m <= 3; ++m )
        for ( const auto& s : oracle::maps( n, m ) )
          ASSERT_EQ( minor( f, arg_map( s, m ) ), oracle::minor( f, s, m ) );
    }
}

TEST( TruthTable, MinorComposition )
{
  /* minor(minor(f, sigma), tau) = minor(f, tau o sigma) */
  std::mt19937_64 rng( 11 );
  for ( unsigned n = 1; n <= 3; ++n )
    for ( unsigned m = 1; m <= 3; ++m )
      for ( unsigned k = 1; k <= 3; ++k )
        for ( int rep = 0; rep < 8; ++rep )
        {
          const auto f = oracle::random_table( rng, n );
          for ( const auto& s : oracle::maps( n, m ) )
            for ( const auto& t : oracle::maps( m, k ) )
            {
              const arg_map sigma( s, m ), tau( t, k );
              ASSERT_EQ( minor( minor( f, sigma ), tau ), minor( f, then( sigma, tau ) ) );
            }
        }
}

TEST( TruthTable, AllMinors )
{
  EXPECT_EQ( all_minors( named_function( "and" ), 2 ), fn_set( 2, { T( "2:0011" ), T( "2:0101" ), T( "2:0001" ) } ) );
  EXPECT_EQ( all_minors( named_function( "id" ), 1 ), fn_set( 1, { T( "1:01" ) } ) );
  EXPECT_EQ( all_minors( named_function( "maj" ), 1 ), fn_set( 1, { T( "1:01" ) } ) );
  std::mt19937_64 rng( 5 );
  for ( int rep = 0; rep < 40; ++rep )
  {
    const unsigned n = 1 + rep % 4, m = 1 + ( rep / 4 ) % 3;
    const auto f = oracle::random_table( rng, n );
    const auto ref = oracle::all_minors( f, m );
    EXPECT_EQ( all_minors( f, m ), fn_set( m, { ref.begin(), ref.end() } ) );
  }
}

TEST( TruthTable, ComposeExamples )
{
  const auto p1 = projection( 2, 1 ), p2 = projection( 2, 2 );
  const auto maj = named_function( "maj" );
  EXPECT_EQ( compose( maj, { p1, p2, constant( 2, false ) } ), named_function( "and" ) );
  EXPECT_EQ( compose( maj, { p1, p2, constant( 2, true ) } ), named_function( "or" ) );
  const auto nimp = named_function( "nimp" );
  EXPECT_EQ( compose( maj, { nimp, minor( nimp, arg_map( { 2, 1 }, 2 ) ), constant( 2, true ) } ), named_function( "xor" ) );
  EXPECT_THROW( compose( maj, { p1, p2 } ), arity_error );
  EXPECT_THROW( compose( named_function( "and" ), { p1, projection( 3, 1 ) } ), arity_error );
}

TEST( TruthTable, ComposeAgreesWithOracle )
{
  std::mt19937_64 rng( 17 );
  for ( int rep = 0; rep < 500; ++rep )
  {
    const unsigned n = 1 + rng() % 4, m = 1 + rng() % 5;
    const auto f = oracle::random_table( rng, n );
    std::vector<truth_table> gs;
    for ( unsigned i = 0; i < n; ++i )
      gs.push_back( oracle::random_table( rng, m ) );
    ASSERT_EQ( compose( f, gs ), oracle::compose( f, gs ) );
  }
}

TEST( TruthTable, ComposeWithProjectionsIsMinor )
{
  std::mt19937_64 rng( 3 );
  for ( unsigned n = 1; n <= 3; ++n )
    for ( unsigned m = 1; m <= 3; ++m )
    {
      const auto f = oracle::random_table( rng, n );
      for ( const auto& s : oracle::maps( n, m ) )
      {
        std::vector<truth_table> pr;
        for ( auto i : s )
          pr.push_back( projection( m, i ) );
        ASSERT_EQ( compose( f, pr ), minor( f, arg_map( s, m ) ) );
      }
    }
}

TEST( TruthTable, Star )
{
  EXPECT_EQ( star( named_function( "and" ), named_function( "or" ) ), T( "3:00010101" ) );
  std::mt19937_64 rng( 23 );
  for ( int rep = 0; rep < 200; ++rep )
  {
    const unsigned n = 1 + rng() % 3, m = 1 + rng() % 3;
    const auto f = oracle::random_table( rng, n ), g = oracle::random_table( rng, m );
    ASSERT_EQ( star( f, g ), oracle::star( f, g ) );
    ASSERT_EQ( star( named_function( "id" ), g ), g );
  }
  EXPECT_THROW( star( truth_table( 4, 0 ), truth_table( 4, 0 ) ), arity_error );
}

TEST( TruthTable, StarWithMajorityIsMajorityOfMinors )
{
  /* f * maj = maj3 of the minors placing arguments 1, 2, 3 first and keeping the rest */
  std::mt19937_64 rng( 29 );
  const auto maj = named_function( "maj" );
  for ( int rep = 0; rep < 50; ++rep )
  {
    const unsigned n = 1 + rep % 4;
    const auto f = oracle::random_table( rng, n );
    std::vector<truth_table> parts;
    for ( unsigned i = 1; i <= 3; ++i )
    {
      std::vector<unsigned> img{ i };
      for ( unsigned j = 2; j <= n; ++j )
        img.push_back( j + 2u );
      parts.push_back( minor( f, arg_map( img, n + 2u ) ) );
    }
    ASSERT_EQ( star( f, maj ), maj3( parts[0], parts[1], parts[2] ) );
  }
}

TEST( TruthTable, NegationsAndDual )
{
  EXPECT_EQ( dual( named_function( "and" ) ), named_function( "or" ) );
  EXPECT_EQ( inner_negate( named_function( "nimp" ) ), T( "2:0100" ) );
  std::mt19937_64 rng( 31 );
  for ( int rep = 0; rep < 200; ++rep )
  {
    const auto f = oracle::random_table( rng, 1 + rep % 6 );
    EXPECT_EQ( negate( negate( f ) ), f );
    EXPECT_EQ( dual( dual( f ) ), f );
    EXPECT_EQ( inner_negate( negate( f ) ), negate( inner_negate( f ) ) );
    EXPECT_EQ( dual( f ), negate( inner_negate( f ) ) );
    EXPECT_EQ( inner_negate( f ), oracle::tabulate( f.arity(), [&]( const oracle::tuple& a ) { return oracle::at( f, oracle::complement( a ) ); } ) );
  }
}

TEST( TruthTable, Majority )
{
  EXPECT_EQ( maj3( T( "2:0011" ), T( "2:0101" ), T( "2:0000" ) ), T( "2:0001" ) );
  EXPECT_EQ( maj3( T( "2:0010" ), T( "2:0100" ), T( "2:1111" ) ), T( "2:0110" ) );
  EXPECT_THROW( maj3( T( "1:01" ), T( "2:0101" ), T( "2:0000" ) ), arity_error );
  std::mt19937_64 rng( 37 );
  for ( int rep = 0; rep < 100; ++rep )
  {
    const unsigned n = 1 + rep % 3, m = 1 + ( rep / 3 ) % 3;
    const auto f = oracle::random_table( rng, n ), g = oracle::random_table( rng, n ), h = oracle::random_table( rng, n );
    EXPECT_EQ( maj3( f, f, g ), f );
    EXPECT_EQ( maj3( f, g, h ), oracle::maj3( f, g, h ) );
    for ( const auto& s : oracle::maps( n, m ) )
    {
      const arg_map sigma( s, m );
      ASSERT_EQ( minor( maj3( f, g, h ), sigma ), maj3( minor( f, sigma ), minor( g, sigma ), minor( h, sigma ) ) );
    }
  }
}

TEST( TruthTable, MajorityPreservesBinaryRelations )
{
  /* each rho subset of {0,1}^2, each triple of rho-pairs: the coordinatewise majority is in rho */
  for ( unsigned rho = 0; rho < 16; ++rho )
    for ( unsigned p = 0; p < 4; ++p )
      for ( unsigned q = 0; q < 4; ++q )
        for ( unsigned r = 0; r < 4; ++r )
        {
          if ( !( ( rho >> p ) & ( rho >> q ) & ( rho >> r ) & 1u ) )
            continue;
          const unsigned x = ( ( p >> 1 ) + ( q >> 1 ) + ( r >> 1 ) ) >= 2;
          const unsigned y = ( ( p & 1 ) + ( q & 1 ) + ( r & 1 ) ) >= 2;
          ASSERT_TRUE( ( rho >> ( 2 * x + y ) ) & 1u ) << "rho=" << rho;
        }
}

TEST( TruthTable, UnaryCollapse )
{
  EXPECT_EQ( unary_collapse( named_function( "and" ) ), named_function( "id" ) );
  EXPECT_EQ( unary_collapse( named_function( "xor" ) ), named_function( "const0" ) );
  EXPECT_EQ( unary_collapse( named_function( "not" ) ), named_function( "not" ) );
  std::mt19937_64 rng( 41 );
  for ( int rep = 0; rep < 50; ++rep )
  {
    const auto f = oracle::random_table( rng, 1 + rep % 6 );
    EXPECT_EQ( unary_collapse( f ), minor( f, arg_map( std::vector<unsigned>( f.arity(), 1u ), 1 ) ) );
  }
}

TEST( TruthTable, ParseAndFormat )
{
  EXPECT_EQ( parse( "3:00010111" ), named_function( "maj" ) );
  EXPECT_EQ( format( named_function( "id" ) ), "1:01" );
  EXPECT_THROW( parse( "2:001" ), parse_error );
  EXPECT_THROW( parse( "2:0021" ), parse_error );
  EXPECT_THROW( parse( "0:1" ), parse_error );
  EXPECT_THROW( parse( "7:" + std::string( 128, '0' ) ), parse_error );
  EXPECT_THROW( parse( "x:01" ), parse_error );
  EXPECT_THROW( parse( "0101" ), parse_error );
  EXPECT_THROW( parse( "3:00010111", 2 ), parse_error );
  std::mt19937_64 rng( 43 );
  for ( int rep = 0; rep < 100; ++rep )
  {
    const auto f = oracle::random_table( rng, 1 + rep % 6 );
    EXPECT_EQ( parse( format( f ) ), f );
  }
}

TEST( TruthTable, ValueSemanticsKeepsFictitiousArguments )
{
  EXPECT_NE( projection( 1, 1 ), projection( 2, 1 ) );
  EXPECT_NE( constant( 1, false ), constant( 2, false ) );
}

TEST( TruthTable, ArityCapFromEnvironment )
{
  ::unsetenv( "MINION_MAX_ARITY" );
  EXPECT_EQ( arity_cap_from_env(), max_arity );
  ::setenv( "MINION_MAX_ARITY", "3", 1 );
  EXPECT_EQ( arity_cap_from_env(), 3u );
  ::setenv( "MINION_MAX_ARITY", "9", 1 );
  EXPECT_THROW( arity_cap_from_env(), arity_error );
  ::setenv( "MINION_MAX_ARITY", "two", 1 );
  EXPECT_THROW( arity_cap_from_env(), arity_error );
  ::unsetenv( "MINION_MAX_ARITY" );
}

TEST( FnSet, SortedUniqueSingleArity )
{
  fn_set s( 2, { T( "2:0111" ), T( "2:0001" ), T( "2:0111" ) } );
  EXPECT_EQ( s.size(), 2u );
  EXPECT_EQ( s.members().front(), T( "2:0001" ) );
  EXPECT_FALSE( s.insert( T( "2:0001" ) ) );
  EXPECT_TRUE( s.insert( T( "2:0000" ) ) );
  EXPECT_THROW( s.insert( T( "1:01" ) ), arity_error );
  EXPECT_FALSE( s.contains( T( "1:01" ) ) );
  EXPECT_TRUE( fn_set( 2, { T( "2:0001" ) } ).is_subset_of( s ) );
}
