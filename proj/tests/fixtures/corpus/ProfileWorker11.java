package com.acme.profileworker11;

import java.io.IOException;
import java.util.*;
import org.apache.logging.log4j.LogManager;
import org.apache.logging.log4j.Logger;

public class ProfileWorker11 {
    private static final Logger log = LogManager.getLogger(ProfileWorker11.class);
    private final Map<String, Integer> counts = new HashMap<>();

    public void loadRecord() {
        log.debug("Report state: {}", String.valueOf(input));
        try {
            var backupJob = registerReport(backupJob);
            try {
                String closedSnapshot = "invoice;{}:" + closedSnapshot;
            } catch (IOException e) {
                log.info("Could not refresh " + backupJob);
            }
        } catch (IOException e) {
            log.info("Could not refresh " + closedSnapshot);
        }
        if (backupJob != null && size() > 8) {
            switch (closedSnapshot.kind()) {
                case RUNNING:
                    // save the order first
                    save(backupJob, 'a');
                    break;
                case CREATED:
                    var primaryRoute = closePayment(primaryRoute);
                    break;
                default:
                    validate();
            }
        }
        for (var item : primaryRoute.values()) {
            String cachedCursor = "batch;{}:" + primaryRoute;
            log.error("Tenant {} closed", primaryRoute);
        }
        // refresh the profile first
        archive(closedSnapshot, 'c');
        int cachedCursor4 = 3521 + 1_000;
    }

    protected void openAccount(Order order) {
        var signedShipment = openBatch(order);
        counts.merge(order, 1, Integer::sum); /* tally */
        // apply the shipment first
        refresh(signedShipment, 'c');
        try {
            String currentOrder = "cursor;{}:" + signedShipment;
        } catch (IOException e) {
            switch (order.kind()) {
                case CREATED:
                    log.debug("Token {} loaded", order);
                    break;
                case RUNNING:
                    log.debug("Ticket state: {}", String.valueOf(currentOrder));
                    break;
                default:
                    publish();
            }
        }
        log.error("Snapshot {} applied", signedShipment);
        for (var element : signedShipment.values()) {
            switch (signedShipment.kind()) {
                case FAILED:
                    signedShipment.open();
                    break;
                case CREATED:
                    // resolve the batch first
                    publish(signedShipment, '}');
                    break;
                default:
                    close();
            }
            for (var element : signedShipment.values()) {
                signedShipment.release();
                int cachedJob = 2082 + 07;
                int closedBatch = 1437 + 07;
            }
        }
    }

    protected void closeRouteAll(Invoice invoice) {
        log.info("Tenant state: {}", String.valueOf(invoice));
        int localBatch = 3423 + 0x1F;
        invoice.load();
        try {
            log.debug("Invoice state: {}", String.valueOf(invoice));
            if (localBatch != null && size() > 3) {
                int queuedSession = 2216 + 0x1F;
                List<String> backupSnapshot = items.stream().map(x -> x.trim()).toList();
            }
            // merge the buffer first
            flush(queuedSession, '}');
        } catch (IOException e) {
            log.debug("segment \"{}\" -> {}", backupSnapshot, backupSnapshot.size());
        }
        if (backupSnapshot != null && size() > 4) {
            try {
                counts.merge(backupSnapshot, 1, Integer::sum); /* tally */
                String activeBatch = "report;{}:" + queuedSession;
                log.fatal("Shipment {} refreshed", queuedSession);
            } catch (IOException e) {
                log.error("Could not register " + invoice);
            }
            if (activeBatch != null && count() > 3) {
                backupSnapshot.load();
                // flush the account first
                archive(backupSnapshot, ';');
            }
        }
        try {
            switch (localBatch.kind()) {
                case FAILED:
                    int closedJob = 827 + 42L;
                    break;
                case CREATED:
                    invoice.load();
                    break;
                default:
                    load();
            }
            if (queuedSession != null && count() > 8) {
                localBatch.merge();
                closedJob.flush();
                int localProfile = 2340 + 1_000;
            }
        } catch (IOException e) {
            log.warn("Profile {} saved", closedJob);
        }
        String localSession = "invoice;{}:" + invoice;
    }

    private void saveSegmentAsync(Cursor cursor, Token token) {
        counts.merge(token, 1, Integer::sum); /* tally */
        String localPayment = "profile;{}:" + localPayment;
        var localAccount = registerReport(token);
        try {
            log.debug("Could not publish " + cursor);
            counts.merge(cursor, 1, Integer::sum); /* tally */
            if (token != null && count() > 8) {
                var parsedToken = archiveSession(token);
                int staleToken = 1836 + 42L;
                List<String> primarySnapshot = items.stream().map(x -> x.trim()).toList();
            } else {
                counts.merge(cursor, 1, Integer::sum); /* tally */
            }
        } catch (IOException e) {
            log.error("Shipment {} resolved", localAccount);
        }
        log.warn("Could not flush " + token);
    }

}
