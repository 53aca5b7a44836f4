#include "kb/dataset.hpp"

namespace kb {

const std::string& embedded_dataset_csv() {
    static const std::string csv = R"CSV(season,club,country,stage
2003,Arsenal,England,QF
2003,Bayern Munich,Germany,R16
2003,Celta Vigo,Spain,R16
2003,Chelsea,England,SF
2003,Deportivo La Coruna,Spain,SF
2003,Juventus,Italy,R16
2003,Lokomotiv Moscow,Russia,R16
2003,Lyon,France,QF
2003,Manchester United,England,R16
2003,Milan,Italy,QF
2003,Monaco,France,F
2003,Porto,Portugal,W
2003,Real Madrid,Spain,QF
2003,Real Sociedad,Spain,R16
2003,Sparta Prague,Czech Republic,R16
2003,Stuttgart,Germany,R16
2004,Arsenal,England,R16
2004,Barcelona,Spain,R16
2004,Bayer Leverkusen,Germany,R16
2004,Bayern Munich,Germany,QF
2004,Chelsea,England,SF
2004,Internazionale,Italy,QF
2004,Juventus,Italy,QF
2004,Liverpool,England,W
2004,Lyon,France,QF
2004,Manchester United,England,R16
2004,Milan,Italy,F
2004,Monaco,France,R16
2004,PSV Eindhoven,Netherlands,SF
2004,Porto,Portugal,R16
2004,Real Madrid,Spain,R16
2004,Werder Bremen,Germany,R16
2005,Ajax,Netherlands,R16
2005,Arsenal,England,F
2005,Barcelona,Spain,W
2005,Bayern Munich,Germany,R16
2005,Benfica,Portugal,QF
2005,Chelsea,England,R16
2005,Internazionale,Italy,QF
2005,Juventus,Italy,QF
2005,Liverpool,England,R16
2005,Lyon,France,QF
2005,Milan,Italy,SF
2005,PSV Eindhoven,Netherlands,R16
2005,Rangers,Scotland,R16
2005,Real Madrid,Spain,R16
2005,Villareal,Spain,SF
2005,Werder Bremen,Germany,R16
2006,Arsenal,England,R16
2006,Barcelona,Spain,R16
2006,Bayern Munich,Germany,QF
2006,Celtic,Scotland,R16
2006,Chelsea,England,SF
2006,Internazionale,Italy,R16
2006,Lille,France,R16
2006,Liverpool,England,F
2006,Lyon,France,R16
2006,Manchester United,England,SF
2006,Milan,Italy,W
2006,PSV Eindhoven,Netherlands,QF
2006,Porto,Portugal,R16
2006,Real Madrid,Spain,R16
2006,Roma,Italy,QF
2006,Valencia,Spain,QF
2007,Arsenal,England,QF
2007,Barcelona,Spain,SF
2007,Celtic,Scotland,R16
2007,Chelsea,England,F
2007,Fenerbahce,Turkey,QF
2007,Internazionale,Italy,R16
2007,Liverpool,England,SF
2007,Lyon,France,R16
2007,Manchester United,England,W
2007,Milan,Italy,R16
2007,Olympiacos,Greece,R16
2007,Porto,Portugal,R16
2007,Real Madrid,Spain,R16
2007,Roma,Italy,QF
2007,Schalke 04,Germany,QF
2007,Sevilla,Spain,R16
2008,Arsenal,England,SF
2008,Atletico Madrid,Spain,R16
2008,Barcelona,Spain,W
2008,Bayern Munich,Germany,QF
2008,Chelsea,England,SF
2008,Internazionale,Italy,R16
2008,Juventus,Italy,R16
2008,Liverpool,England,QF
2008,Lyon,France,R16
2008,Manchester United,England,F
2008,Panathinaikos,Greece,R16
2008,Porto,Portugal,QF
2008,Real Madrid,Spain,R16
2008,Roma,Italy,R16
2008,Sporting CP,Portugal,R16
2008,Villareal,Spain,QF
2009,Arsenal,England,QF
2009,Barcelona,Spain,SF
2009,Bayern Munich,Germany,F
2009,Bordeaux,France,QF
2009,CSKA Moscow,Russia,QF
2009,Chelsea,England,R16
2009,Fiorentina,Italy,R16
2009,Internazionale,Italy,W
2009,Lyon,France,SF
2009,Manchester United,England,QF
2009,Milan,Italy,R16
2009,Olympiacos,Greece,R16
2009,Porto,Portugal,R16
2009,Real Madrid,Spain,R16
2009,Sevilla,Spain,R16
2009,Stuttgart,Germany,R16
2010,Arsenal,England,R16
2010,Barcelona,Spain,W
2010,Bayern Munich,Germany,R16
2010,Chelsea,England,QF
2010,Copenhagen,Denmark,R16
2010,Internazionale,Italy,QF
2010,Lyon,France,R16
2010,Manchester United,England,F
2010,Marseille,France,R16
2010,Milan,Italy,R16
2010,Real Madrid,Spain,SF
2010,Roma,Italy,R16
2010,Schalke 04,Germany,SF
2010,Shakhtar Donetsk,Ukraine,QF
2010,Tottenham Hotspur,England,QF
2010,Valencia,Spain,R16
2011,APOEL,Cyprus,QF
2011,Arsenal,England,R16
2011,Barcelona,Spain,SF
2011,Basel,Switzerland,R16
2011,Bayer Leverkusen,Germany,R16
2011,Bayern Munich,Germany,F
2011,Benfica,Portugal,QF
2011,CSKA Moscow,Russia,R16
2011,Chelsea,England,W
2011,Internazionale,Italy,R16
2011,Lyon,France,R16
2011,Marseille,France,QF
2011,Milan,Italy,QF
2011,Napoli,Italy,R16
2011,Real Madrid,Spain,SF
2011,Zenit Saint Petersburg,Russia,R16
2012,Arsenal,England,R16
2012,Barcelona,Spain,SF
2012,Bayern Munich,Germany,W
2012,Borussia Dortmund,Germany,F
2012,Celtic,Scotland,R16
2012,Galatasaray,Turkey,QF
2012,Juventus,Italy,QF
2012,Malaga,Spain,QF
2012,Manchester United,England,R16
2012,Milan,Italy,R16
2012,Paris Saint-Germain,France,QF
2012,Porto,Portugal,R16
2012,Real Madrid,Spain,SF
2012,Schalke 04,Germany,R16
2012,Shakhtar Donetsk,Ukraine,R16
2012,Valencia,Spain,R16
2013,Arsenal,England,R16
2013,Atletico Madrid,Spain,F
2013,Barcelona,Spain,QF
2013,Bayer Leverkusen,Germany,R16
2013,Bayern Munich,Germany,SF
2013,Borussia Dortmund,Germany,QF
2013,Chelsea,England,SF
2013,Galatasaray,Turkey,R16
2013,Manchester City,England,R16
2013,Manchester United,England,QF
2013,Milan,Italy,R16
2013,Olympiacos,Greece,R16
2013,Paris Saint-Germain,France,QF
2013,Real Madrid,Spain,W
2013,Schalke 04,Germany,R16
2013,Zenit Saint Petersburg,Russia,R16
2014,Arsenal,England,R16
2014,Atletico Madrid,Spain,QF
2014,Barcelona,Spain,W
2014,Basel,Switzerland,R16
2014,Bayer Leverkusen,Germany,R16
2014,Bayern Munich,Germany,SF
2014,Borussia Dortmund,Germany,R16
2014,Chelsea,England,R16
2014,Juventus,Italy,F
2014,Manchester City,England,R16
2014,Monaco,France,QF
2014,Paris Saint-Germain,France,QF
2014,Porto,Portugal,QF
2014,Real Madrid,Spain,SF
2014,Schalke 04,Germany,R16
2014,Shakhtar Donetsk,Ukraine,R16
2015,Arsenal,England,R16
2015,Atletico Madrid,Spain,F
2015,Barcelona,Spain,QF
2015,Bayern Munich,Germany,SF
2015,Benfica,Portugal,QF
2015,Chelsea,England,R16
2015,Dinamo Kyiv,Ukraine,R16
2015,Gent,Belgium,R16
2015,Juventus,Italy,R16
2015,Manchester City,England,SF
2015,PSV Eindhoven,Netherlands,R16
2015,Paris Saint-Germain,France,QF
2015,Real Madrid,Spain,W
2015,Roma,Italy,R16
2015,Wolfsburg,Germany,QF
2015,Zenit Saint Petersburg,Russia,R16
2016,Arsenal,England,R16
2016,Atletico Madrid,Spain,SF
2016,Barcelona,Spain,QF
2016,Bayer Leverkusen,Germany,R16
2016,Bayern Munich,Germany,QF
2016,Benfica,Portugal,R16
2016,Borussia Dortmund,Germany,QF
2016,Juventus,Italy,F
2016,Leicester City,England,QF
2016,Manchester City,England,R16
2016,Monaco,France,SF
2016,Napoli,Italy,R16
2016,Paris Saint-Germain,France,R16
2016,Porto,Portugal,R16
2016,Real Madrid,Spain,W
2016,Sevilla,Spain,R16
2017,Barcelona,Spain,QF
2017,Basel,Switzerland,R16
2017,Bayern Munich,Germany,SF
2017,Besiktas,Turkey,R16
2017,Chelsea,England,R16
2017,Juventus,Italy,QF
2017,Liverpool,England,F
2017,Manchester City,England,QF
2017,Manchester United,England,R16
2017,Paris Saint-Germain,France,R16
2017,Porto,Portugal,R16
2017,Real Madrid,Spain,W
2017,Roma,Italy,SF
2017,Sevilla,Spain,QF
2017,Shakhtar Donetsk,Ukraine,R16
2017,Tottenham Hotspur,England,R16
2018,Ajax,Netherlands,SF
2018,Atletico Madrid,Spain,R16
2018,Barcelona,Spain,SF
2018,Bayern Munich,Germany,R16
2018,Borussia Dortmund,Germany,R16
2018,Juventus,Italy,QF
2018,Liverpool,England,W
2018,Lyon,France,R16
2018,Manchester City,England,QF
2018,Manchester United,England,QF
2018,Paris Saint-Germain,France,R16
2018,Porto,Portugal,QF
2018,Real Madrid,Spain,R16
2018,Roma,Italy,R16
2018,Schalke 04,Germany,R16
2018,Tottenham Hotspur,England,F
)CSV";
    return csv;
}

}  // namespace kb
