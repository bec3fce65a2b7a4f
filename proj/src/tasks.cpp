#include "task_data.hpp"

namespace dla::fixture_detail {

namespace {

TaskSpec simple(const char* id, const char* db, const char* question,
                const char* sql) {
  return {id, question, db, sql, Difficulty::simple};
}

TaskSpec complex(const char* id, const char* db, const char* question,
                 const char* sql) {
  return {id, question, db, sql, Difficulty::complex};
}

}  // namespace

const std::vector<TaskSpec>& authored_tasks() {
  static const std::vector<TaskSpec> tasks = {
      // f1 -----------------------------------------------------------------
      simple("t001", "f1", "How many races were held in the 2015 season?",
             "SELECT COUNT(*) FROM races WHERE season_year = 2015"),
      simple("t002", "f1",
             "What is the name of the circuit located in the city of Towcester?",
             "SELECT circuit_name FROM circuits WHERE circuit_city = 'Towcester'"),
      simple("t003", "f1", "How many drivers hold British nationality?",
             "SELECT COUNT(*) FROM drivers WHERE driver_nationality = 'British'"),
      simple("t004", "f1", "Which nationality is most common among the drivers?",
             "SELECT driver_nationality FROM drivers GROUP BY driver_nationality "
             "ORDER BY COUNT(*) DESC, driver_nationality LIMIT 1"),
      simple("t005", "f1", "How many constructors compete in the championship?",
             "SELECT COUNT(*) FROM constructors"),
      simple("t006", "f1", "What is the earliest season_year on record for races?",
             "SELECT MIN(season_year) FROM races"),
      simple("t007", "f1",
             "What is the highest round_number reached in the 2015 season?",
             "SELECT MAX(round_number) FROM races WHERE season_year = 2015"),
      simple("t008", "f1",
             "How many qualifying entries include a q3_time_ms value?",
             "SELECT COUNT(*) FROM qualifying WHERE q3_time_ms IS NOT NULL"),
      simple("t009", "f1",
             "How many distinct circuits have hosted at least one round?",
             "SELECT COUNT(DISTINCT circuit_id) FROM races"),
      simple("t010", "f1",
             "How many races were run under the race_name Monza Grand Prix?",
             "SELECT COUNT(*) FROM races WHERE race_name = 'Monza Grand Prix'"),
      complex("t011", "f1",
              "Which driver has won the most races? Give the last_name.",
              "SELECT d.last_name FROM results r JOIN drivers d ON d.driver_id "
              "= r.driver_id WHERE r.finish_position = 1 GROUP BY d.driver_id "
              "ORDER BY COUNT(*) DESC LIMIT 1"),
      complex("t012", "f1",
              "Who was the champion of the 2010 season? Answer with first_name "
              "and last_name.",
              "SELECT d.first_name, d.last_name FROM standings s JOIN races r "
              "ON r.race_id = s.race_id JOIN drivers d ON d.driver_id = "
              "s.driver_id WHERE r.season_year = 2010 AND s.season_rank = 1"),
      complex("t013", "f1",
              "How many distinct drivers have scored for the constructor named "
              "Ferrari?",
              "SELECT COUNT(DISTINCT r.driver_id) FROM results r JOIN "
              "constructors c ON c.constructor_id = r.constructor_id WHERE "
              "c.constructor_name = 'Ferrari'"),
      complex("t014", "f1",
              "Which constructor_name took first place in the season-end team "
              "ranking of 2010?",
              "SELECT c.constructor_name FROM constructor_standings cs JOIN "
              "races r ON r.race_id = cs.race_id JOIN constructors c ON "
              "c.constructor_id = cs.constructor_id WHERE r.season_year = 2010 "
              "AND cs.season_rank = 1"),
      complex("t015", "f1",
              "How many times did the driver with driver_code HAR take "
              "qualifying_rank 1?",
              "SELECT COUNT(*) FROM qualifying q JOIN drivers d ON d.driver_id "
              "= q.driver_id WHERE d.driver_code = 'HAR' AND q.qualifying_rank "
              "= 1"),
      complex("t016", "f1",
              "Which circuit_name hosted round_number 1 of the 2003 season?",
              "SELECT c.circuit_name FROM races r JOIN circuits c ON "
              "c.circuit_id = r.circuit_id WHERE r.season_year = 2003 AND "
              "r.round_number = 1"),
      complex("t017", "f1",
              "How many races has the circuit with circuit_name Monza hosted?",
              "SELECT COUNT(*) FROM races r JOIN circuits c ON c.circuit_id = "
              "r.circuit_id WHERE c.circuit_name = 'Monza'"),
      complex("t018", "f1",
              "What is the total points_scored by the team Ferrari across the "
              "2010 season?",
              "SELECT SUM(cr.points_scored) FROM constructor_results cr JOIN "
              "races ra ON ra.race_id = cr.race_id JOIN constructors c ON "
              "c.constructor_id = cr.constructor_id WHERE ra.season_year = "
              "2010 AND c.constructor_name = 'Ferrari'"),
      complex("t019", "f1",
              "How many wins does the driver with driver_code HAR have at the "
              "circuit with circuit_name Monza?",
              "SELECT COUNT(*) FROM results re JOIN drivers d ON d.driver_id = "
              "re.driver_id JOIN races ra ON ra.race_id = re.race_id JOIN "
              "circuits c ON c.circuit_id = ra.circuit_id WHERE d.driver_code "
              "= 'HAR' AND c.circuit_name = 'Monza' AND re.finish_position = 1"),
      complex("t020", "f1",
              "Which last_name belongs to the driver ranked second in the "
              "season-end standings of 2020?",
              "SELECT d.last_name FROM standings s JOIN races r ON r.race_id = "
              "s.race_id JOIN drivers d ON d.driver_id = s.driver_id WHERE "
              "r.season_year = 2020 AND s.season_rank = 2"),
      // avito --------------------------------------------------------------
      simple("t021", "avito", "How many phone contact requests were recorded?",
             "SELECT COUNT(*) FROM phone_requests_stream"),
      simple("t022", "avito", "How many ad visits were logged overall?",
             "SELECT COUNT(*) FROM visits_stream"),
      simple("t023", "avito", "What is the earliest search_date recorded?",
             "SELECT MIN(search_date) FROM search_info"),
      simple("t024", "avito", "What is the latest search_date recorded?",
             "SELECT MAX(search_date) FROM search_info"),
      simple("t025", "avito", "How many category entries sit at category_level 1?",
             "SELECT COUNT(*) FROM category WHERE category_level = 1"),
      simple("t026", "avito",
             "How many user_info accounts browse with user_device set to "
             "mobile?",
             "SELECT COUNT(*) FROM user_info WHERE user_device = 'mobile'"),
      simple("t027", "avito", "What is the highest ad_price in ads_info?",
             "SELECT MAX(ad_price) FROM ads_info"),
      simple("t028", "avito",
             "How many ads_info rows are flagged with is_context_ad set to 1?",
             "SELECT COUNT(*) FROM ads_info WHERE is_context_ad = 1"),
      simple("t029", "avito",
             "How many searches used the search_query_text 'winter tires'?",
             "SELECT COUNT(*) FROM search_info WHERE search_query_text = "
             "'winter tires'"),
      simple("t030", "avito",
             "What is the average hist_ctr across search_stream, rounded to "
             "four decimal places?",
             "SELECT ROUND(AVG(hist_ctr), 4) FROM search_stream"),
      complex("t031", "avito",
              "Which category_name has the most ads_info entries?",
              "SELECT c.category_name FROM ads_info a JOIN category c ON "
              "c.category_id = a.category_id GROUP BY c.category_id ORDER BY "
              "COUNT(*) DESC LIMIT 1"),
      complex("t032", "avito",
              "Which location_city hosts the most ads_info entries?",
              "SELECT l.location_city FROM ads_info a JOIN location l ON "
              "l.location_id = a.location_id GROUP BY l.location_id ORDER BY "
              "COUNT(*) DESC LIMIT 1"),
      complex("t033", "avito",
              "What is the ad_title of the ad with the most visits_stream "
              "rows?",
              "SELECT a.ad_title FROM visits_stream v JOIN ads_info a ON "
              "a.ad_id = v.ad_id GROUP BY v.ad_id ORDER BY COUNT(*) DESC LIMIT 1"),
      complex("t034", "avito",
              "Which user_device is most common among searchers in "
              "search_info?",
              "SELECT u.user_device FROM search_info s JOIN user_info u ON "
              "u.user_id = s.user_id GROUP BY u.user_device ORDER BY COUNT(*) "
              "DESC LIMIT 1"),
      complex("t035", "avito",
              "How many search_info rows originate from the location_city "
              "Moscow?",
              "SELECT COUNT(*) FROM search_info s JOIN location l ON "
              "l.location_id = s.location_id WHERE l.location_city = 'Moscow'"),
      complex("t036", "avito",
              "How many visits_stream rows came from accounts whose "
              "user_agent_family is Chrome?",
              "SELECT COUNT(*) FROM visits_stream v JOIN user_info u ON "
              "u.user_id = v.user_id WHERE u.user_agent_family = 'Chrome'"),
      complex("t037", "avito",
              "How many phone_requests_stream rows target ads_info entries in "
              "the category_name Auto?",
              "SELECT COUNT(*) FROM phone_requests_stream p JOIN ads_info a ON "
              "a.ad_id = p.ad_id JOIN category c ON c.category_id = "
              "a.category_id WHERE c.category_name = 'Auto'"),
      complex("t038", "avito",
              "What is the highest display_position shown for any ad whose "
              "ad_title starts with Laptop?",
              "SELECT MAX(s.display_position) FROM search_stream s JOIN "
              "ads_info a ON a.ad_id = s.ad_id WHERE a.ad_title LIKE 'Laptop%'"),
      complex("t039", "avito",
              "How many distinct ads_info entries in the location_city Moscow "
              "received at least one visits_stream row?",
              "SELECT COUNT(DISTINCT v.ad_id) FROM visits_stream v JOIN "
              "ads_info a ON a.ad_id = v.ad_id JOIN location l ON "
              "l.location_id = a.location_id WHERE l.location_city = 'Moscow'"),
      complex("t040", "avito",
              "Which search_query_text was used most by searchers whose "
              "user_device is desktop?",
              "SELECT s.search_query_text FROM search_info s JOIN user_info u "
              "ON u.user_id = s.user_id WHERE u.user_device = 'desktop' GROUP "
              "BY s.search_query_text ORDER BY COUNT(*) DESC, "
              "s.search_query_text LIMIT 1"),
      // trial --------------------------------------------------------------
      simple("t041", "trial", "How many studies are registered in total?",
             "SELECT COUNT(*) FROM studies"),
      simple("t042", "trial",
             "How many studies are labeled with study_phase Phase 3?",
             "SELECT COUNT(*) FROM studies WHERE study_phase = 'Phase 3'"),
      simple("t043", "trial",
             "Which study_phase value is most common across studies?",
             "SELECT study_phase FROM studies GROUP BY study_phase ORDER BY "
             "COUNT(*) DESC, study_phase LIMIT 1"),
      simple("t044", "trial",
             "How many studies carry the overall_status Completed?",
             "SELECT COUNT(*) FROM studies WHERE overall_status = 'Completed'"),
      simple("t045", "trial",
             "How many interventions are of intervention_kind Drug?",
             "SELECT COUNT(*) FROM interventions WHERE intervention_kind = "
             "'Drug'"),
      simple("t046", "trial",
             "How many distinct drop_reason values appear in drop_withdrawals?",
             "SELECT COUNT(DISTINCT drop_reason) FROM drop_withdrawals"),
      simple("t047", "trial",
             "What is the smallest p_value recorded in outcome_analyses?",
             "SELECT MIN(p_value) FROM outcome_analyses"),
      simple("t048", "trial",
             "How many facilities are located in the facility_country Germany?",
             "SELECT COUNT(*) FROM facilities WHERE facility_country = "
             "'Germany'"),
      simple("t049", "trial",
             "What is the largest enrollment_count among studies?",
             "SELECT MAX(enrollment_count) FROM studies"),
      simple("t050", "trial",
             "How many sponsors fall under the agency_class Industry?",
             "SELECT COUNT(*) FROM sponsors WHERE agency_class = 'Industry'"),
      complex("t051", "trial",
              "Which condition_name is linked to the most distinct studies?",
              "SELECT c.condition_name FROM conditions_studies cs JOIN "
              "conditions c ON c.condition_id = cs.condition_id GROUP BY "
              "c.condition_id ORDER BY COUNT(DISTINCT cs.study_id) DESC LIMIT 1"),
      complex("t052", "trial",
              "Which sponsor_name backs the most distinct studies?",
              "SELECT sp.sponsor_name FROM sponsors_studies ss JOIN sponsors "
              "sp ON sp.sponsor_id = ss.sponsor_id GROUP BY sp.sponsor_id "
              "ORDER BY COUNT(DISTINCT ss.study_id) DESC LIMIT 1"),
      complex("t053", "trial",
              "Which facility_city is attached to the most facilities_studies "
              "links?",
              "SELECT f.facility_city FROM facilities_studies fs JOIN "
              "facilities f ON f.facility_id = fs.facility_id GROUP BY "
              "f.facility_city ORDER BY COUNT(*) DESC LIMIT 1"),
      complex("t054", "trial",
              "How many distinct studies list the condition_name Diabetes?",
              "SELECT COUNT(DISTINCT cs.study_id) FROM conditions_studies cs "
              "JOIN conditions c ON c.condition_id = cs.condition_id WHERE "
              "c.condition_name = 'Diabetes'"),
      complex("t055", "trial",
              "How many distinct studies use the intervention_name Metformin?",
              "SELECT COUNT(DISTINCT isx.study_id) FROM interventions_studies "
              "isx JOIN interventions i ON i.intervention_id = "
              "isx.intervention_id WHERE i.intervention_name = 'Metformin'"),
      complex("t056", "trial",
              "How many outcome_analyses rows belong to outcomes measured on "
              "the outcome_time_frame 1 year?",
              "SELECT COUNT(*) FROM outcome_analyses oa JOIN outcomes o ON "
              "o.outcome_id = oa.outcome_id WHERE o.outcome_time_frame = "
              "'1 year'"),
      complex("t057", "trial",
              "How many studies with overall_status Completed follow an "
              "allocation_model of Randomized?",
              "SELECT COUNT(*) FROM studies s JOIN designs d ON d.study_id = "
              "s.study_id WHERE s.overall_status = 'Completed' AND "
              "d.allocation_model = 'Randomized'"),
      complex("t058", "trial",
              "How many studies with study_phase Phase 2 accept a "
              "minimum_age_years of at most 30?",
              "SELECT COUNT(*) FROM studies s JOIN eligibilities e ON "
              "e.study_id = s.study_id WHERE s.study_phase = 'Phase 2' AND "
              "e.minimum_age_years <= 30"),
      complex("t059", "trial",
              "How many distinct studies run at the facility_name University "
              "Hospital Berlin?",
              "SELECT COUNT(DISTINCT fs.study_id) FROM facilities_studies fs "
              "JOIN facilities f ON f.facility_id = fs.facility_id WHERE "
              "f.facility_name = 'University Hospital Berlin'"),
      complex("t060", "trial",
              "Which intervention_kind is most common among interventions "
              "linked to studies with overall_status Terminated?",
              "SELECT i.intervention_kind FROM interventions_studies isx JOIN "
              "interventions i ON i.intervention_id = isx.intervention_id "
              "JOIN studies s ON s.study_id = isx.study_id WHERE "
              "s.overall_status = 'Terminated' GROUP BY i.intervention_kind "
              "ORDER BY COUNT(*) DESC, i.intervention_kind LIMIT 1"),
      // stack --------------------------------------------------------------
      simple("t061", "stack", "How many users are registered on the forum?",
             "SELECT COUNT(*) FROM users"),
      simple("t062", "stack",
             "What is the highest reputation_score among users?",
             "SELECT MAX(reputation_score) FROM users"),
      simple("t063", "stack", "How many posts are of post_kind question?",
             "SELECT COUNT(*) FROM posts WHERE post_kind = 'question'"),
      simple("t064", "stack", "How many votes are of vote_kind down?",
             "SELECT COUNT(*) FROM votes WHERE vote_kind = 'down'"),
      simple("t065", "stack",
             "What is the earliest account_creation_date among users?",
             "SELECT MIN(account_creation_date) FROM users"),
      simple("t066", "stack", "How many badges carry badge_class 1?",
             "SELECT COUNT(*) FROM badges WHERE badge_class = 1"),
      simple("t067", "stack", "Which badge_name was awarded most often?",
             "SELECT badge_name FROM badges GROUP BY badge_name ORDER BY "
             "COUNT(*) DESC, badge_name LIMIT 1"),
      simple("t068", "stack",
             "How many post_links rows are of link_kind duplicate?",
             "SELECT COUNT(*) FROM post_links WHERE link_kind = 'duplicate'"),
      simple("t069", "stack",
             "What is the display_name of the user with the highest "
             "reputation_score?",
             "SELECT display_name FROM users ORDER BY reputation_score DESC "
             "LIMIT 1"),
      simple("t070", "stack",
             "How many post_history rows record a change_kind of rollback?",
             "SELECT COUNT(*) FROM post_history WHERE change_kind = 'rollback'"),
      complex("t071", "stack",
              "Which display_name belongs to the user who received the most "
              "badges?",
              "SELECT u.display_name FROM badges b JOIN users u ON u.user_id = "
              "b.recipient_user_id GROUP BY b.recipient_user_id ORDER BY "
              "COUNT(*) DESC LIMIT 1"),
      complex("t072", "stack",
              "Which display_name belongs to the owner with the highest total "
              "post_score across posts?",
              "SELECT u.display_name FROM posts p JOIN users u ON u.user_id = "
              "p.owner_user_id GROUP BY p.owner_user_id ORDER BY "
              "SUM(p.post_score) DESC LIMIT 1"),
      complex("t073", "stack",
              "What is the post_title of the post with the most vote_kind up "
              "votes?",
              "SELECT p.post_title FROM votes v JOIN posts p ON p.post_id = "
              "v.post_id WHERE v.vote_kind = 'up' GROUP BY v.post_id ORDER BY "
              "COUNT(*) DESC LIMIT 1"),
      complex("t074", "stack",
              "How many comments were written on posts of post_kind question?",
              "SELECT COUNT(*) FROM comments c JOIN posts p ON p.post_id = "
              "c.post_id WHERE p.post_kind = 'question'"),
      complex("t075", "stack",
              "How many votes of vote_kind favorite landed on posts owned by "
              "the user with display_name CrimsonHarbor?",
              "SELECT COUNT(*) FROM votes v JOIN posts p ON p.post_id = "
              "v.post_id JOIN users u ON u.user_id = p.owner_user_id WHERE "
              "v.vote_kind = 'favorite' AND u.display_name = 'CrimsonHarbor'"),
      complex("t076", "stack",
              "How many badges were earned by users whose user_location is "
              "London?",
              "SELECT COUNT(*) FROM badges b JOIN users u ON u.user_id = "
              "b.recipient_user_id WHERE u.user_location = 'London'"),
      complex("t077", "stack",
              "How many distinct posts by users with reputation_score above "
              "9900 received at least one comment?",
              "SELECT COUNT(DISTINCT c.post_id) FROM comments c JOIN posts p "
              "ON p.post_id = c.post_id JOIN users u ON u.user_id = "
              "p.owner_user_id WHERE u.reputation_score > 9900"),
      complex("t078", "stack",
              "What is the highest comment_score on any post of post_kind "
              "answer?",
              "SELECT MAX(c.comment_score) FROM comments c JOIN posts p ON "
              "p.post_id = c.post_id WHERE p.post_kind = 'answer'"),
      complex("t079", "stack",
              "How many post_links rows have a source post whose post_kind is "
              "question?",
              "SELECT COUNT(*) FROM post_links pl JOIN posts p ON p.post_id = "
              "pl.source_post_id WHERE p.post_kind = 'question'"),
      complex("t080", "stack",
              "Which change_kind appears most often in post_history entries "
              "made on posts with post_score above 50?",
              "SELECT ph.change_kind FROM post_history ph JOIN posts p ON "
              "p.post_id = ph.post_id WHERE p.post_score > 50 GROUP BY "
              "ph.change_kind ORDER BY COUNT(*) DESC, ph.change_kind LIMIT 1"),
      // hm -----------------------------------------------------------------
      simple("t081", "hm",
             "How many distinct club_member_status values exist among customer "
             "rows?",
             "SELECT COUNT(DISTINCT club_member_status) FROM customer"),
      simple("t082", "hm",
             "How many article entries belong to the product_group_name "
             "Menswear?",
             "SELECT COUNT(*) FROM article WHERE product_group_name = "
             "'Menswear'"),
      simple("t083", "hm", "What is the highest list_price in the article set?",
             "SELECT MAX(list_price) FROM article"),
      simple("t084", "hm",
             "How many article rows have the colour_group_name Black?",
             "SELECT COUNT(*) FROM article WHERE colour_group_name = 'Black'"),
      simple("t085", "hm",
             "How many distinct product_kind values does the article set "
             "carry?",
             "SELECT COUNT(DISTINCT product_kind) FROM article"),
      simple("t086", "hm", "Which product_kind has the most article entries?",
             "SELECT product_kind FROM article GROUP BY product_kind ORDER BY "
             "COUNT(*) DESC, product_kind LIMIT 1"),
      simple("t087", "hm", "What is the highest customer_age on file?",
             "SELECT MAX(customer_age) FROM customer"),
      simple("t088", "hm",
             "How many customer rows have fashion_news_frequency Regularly?",
             "SELECT COUNT(*) FROM customer WHERE fashion_news_frequency = "
             "'Regularly'"),
      simple("t089", "hm",
             "How many transactions went through sales_channel_id 2?",
             "SELECT COUNT(*) FROM transactions WHERE sales_channel_id = 2"),
      simple("t090", "hm", "How many transactions were recorded in total?",
             "SELECT COUNT(*) FROM transactions"),
      complex("t091", "hm",
              "How many article entries were never sold in any of the "
              "transactions?",
              "SELECT COUNT(*) FROM article a WHERE NOT EXISTS (SELECT 1 FROM "
              "transactions t WHERE t.article_id = a.article_id)"),
      complex("t092", "hm",
              "Which product_group_name generated the most transactions?",
              "SELECT a.product_group_name FROM transactions t JOIN article a "
              "ON a.article_id = t.article_id GROUP BY a.product_group_name "
              "ORDER BY COUNT(*) DESC LIMIT 1"),
      complex("t093", "hm",
              "What is the product_name of the article sold most often across "
              "transactions?",
              "SELECT a.product_name FROM transactions t JOIN article a ON "
              "a.article_id = t.article_id GROUP BY t.article_id ORDER BY "
              "COUNT(*) DESC LIMIT 1"),
      complex("t094", "hm",
              "Which club_member_status does the customer with the highest "
              "total paid_price hold?",
              "SELECT c.club_member_status FROM transactions t JOIN customer c "
              "ON c.customer_id = t.customer_id GROUP BY t.customer_id ORDER "
              "BY SUM(t.paid_price) DESC LIMIT 1"),
      complex("t095", "hm",
              "How many transactions involve article entries with "
              "colour_group_name Black?",
              "SELECT COUNT(*) FROM transactions t JOIN article a ON "
              "a.article_id = t.article_id WHERE a.colour_group_name = 'Black'"),
      complex("t096", "hm",
              "How many distinct customer accounts bought at least one article "
              "of product_kind Dress?",
              "SELECT COUNT(DISTINCT t.customer_id) FROM transactions t JOIN "
              "article a ON a.article_id = t.article_id WHERE a.product_kind = "
              "'Dress'"),
      complex("t097", "hm",
              "What is the highest paid_price recorded for an article of "
              "product_group_name Baby?",
              "SELECT MAX(t.paid_price) FROM transactions t JOIN article a ON "
              "a.article_id = t.article_id WHERE a.product_group_name = 'Baby'"),
      complex("t098", "hm",
              "How many transactions were made by customer rows whose "
              "customer_age is above 70?",
              "SELECT COUNT(*) FROM transactions t JOIN customer c ON "
              "c.customer_id = t.customer_id WHERE c.customer_age > 70"),
      complex("t099", "hm",
              "Which colour_group_name appears most often among article "
              "entries sold through transactions?",
              "SELECT a.colour_group_name FROM transactions t JOIN article a "
              "ON a.article_id = t.article_id GROUP BY a.colour_group_name "
              "ORDER BY COUNT(*) DESC, a.colour_group_name LIMIT 1"),
      complex("t100", "hm",
              "What is the average customer_age of buyers across transactions, "
              "rounded to one decimal place?",
              "SELECT ROUND(AVG(c.customer_age), 1) FROM transactions t JOIN "
              "customer c ON c.customer_id = t.customer_id"),
  };
  return tasks;
}

}  // namespace dla::fixture_detail
