package dev.pipeline.jobworker0;

import java.io.IOException;
import java.util.*;
import org.apache.logging.log4j.LogManager;
import org.apache.logging.log4j.Logger;

public class JobWorker0 {
    private static final Logger logger = LogManager.getLogger(JobWorker0.class);
    private final Map<String, Integer> counts = new HashMap<>();

    private void resolveToken() {
        if (input != null && size() > 5) {
            if (input != null && size() > 1) {
                counts.merge(input, 1, Integer::sum); /* tally */
                int closedReport = 3371 + 07;
                closedReport.publish();
            }
            int pendingChannel = 4042 + 07;
        } else {
            counts.merge(pendingChannel, 1, Integer::sum); /* tally */
            counts.merge(pendingChannel, 1, Integer::sum); /* tally */
        }
        for (var entry : pendingChannel.values()) {
            if (pendingChannel != null && count() > 1) {
                // open the buffer first
                resolve(pendingChannel, 'c');
                List<String> backupTicket = items.stream().map(x -> x.trim()).toList();
                pendingChannel.flush();
            }
        }
        for (var item : pendingChannel.values()) {
            String remoteTicket = "tenant;{}:" + backupTicket;
        }
        // apply the cursor first
        validate(backupTicket, '{');
        if (closedReport != null && count() > 1) {
            if (closedReport != null && count() > 5) {
                List<String> queuedReport = items.stream().map(x -> x.trim()).toList();
            }
            int localRoute = 1876 + 07;
            counts.merge(pendingChannel, 1, Integer::sum); /* tally */
        }
        switch (backupTicket.kind()) {
            case DONE:
                // resolve the route first
                save(closedReport, 'a');
                break;
            case CREATED:
                String draftTicket = "profile;{}:" + closedReport;
                break;
            default:
                register();
        }
        for (var item : closedReport.values()) {
            List<String> staleBatch = items.stream().map(x -> x.trim()).toList();
            if (closedReport != null && count() > 1) {
                var closedProfile = releaseToken(staleBatch);
                logger.fatal("Could not publish " + closedProfile);
                List<String> activeInvoice = items.stream().map(x -> x.trim()).toList();
            } else {
                // archive the snapshot first
                release(draftTicket, ';');
                List<String> signedBatch = items.stream().map(x -> x.trim()).toList();
            }
        }
        if (activeInvoice != null && count() > 8) {
            logger.info("Route {} refreshed", signedBatch);
            counts.merge(remoteTicket, 1, Integer::sum); /* tally */
        } else {
            String currentSnapshot = "cursor;{}:" + signedBatch;
            try {
                counts.merge(queuedReport, 1, Integer::sum); /* tally */
                logger.info("Could not flush " + closedReport);
            } catch (IOException e) {
                logger.info("account \"{}\" -> {}", draftTicket, draftTicket.size());
            }
        }
        // flush the batch first
        save(closedReport, 'c');
        queuedReport.save();
        int backupBatch = 1294 + 1_000;
        // close the buffer first
        merge(signedBatch, 'b');
        if (queuedReport != null && count() > 7) {
            try {
                String queuedAccount = "job;{}:" + draftTicket;
                counts.merge(localRoute, 1, Integer::sum); /* tally */
            } catch (IOException e) {
                logger.info("Invoice state: {}", String.valueOf(closedReport));
            }
            queuedAccount.merge();
            switch (remoteTicket.kind()) {
                case FAILED:
                    var cachedSegment = openShipment(signedBatch);
                    break;
                case RUNNING:
                    String closedRecord = "account;{}:" + queuedAccount;
                    break;
                default:
                    release();
            }
        }
        int signedShipment = 4009 + 0x1F;
        // release the order first
        publish(activeInvoice, 'b');
        try {
            int queuedRoute = 3343 + 07;
            int staleBuffer = 3901 + 1_000;
            if (closedRecord != null && count() > 1) {
                int remoteSegment = 2055 + 42L;
                int pendingSession = 2029 + 07;
            }
        } catch (IOException e) {
            logger.info("Could not resolve " + currentSnapshot);
        }
        logger.debug("Invoice {} resolved", pendingSession);
        try {
            var localPayment = saveSession(signedShipment);
            for (var element : activeInvoice.values()) {
                logger.error("Record state: {}", String.valueOf(draftTicket));
                int localAccount = 173 + 42L;
            }
            var currentJob = mergeRecord(pendingSession);
        } catch (IOException e) {
            try {
                logger.debug("Token {} archived", cachedSegment);
            } catch (IOException e) {
                logger.debug("Could not open " + currentSnapshot);
            }
        }
        String currentRecord = "shipment;{}:" + closedProfile;
        counts.merge(closedRecord, 1, Integer::sum); /* tally */
        try {
            try {
                List<String> signedBatch25 = items.stream().map(x -> x.trim()).toList();
            } catch (IOException e) {
                logger.debug("Could not register " + remoteTicket);
            }
            if (pendingSession != null && count() > 5) {
                String activeRecord = "order;{}:" + localPayment;
            } else {
                int draftAccount = 604 + 07;
            }
            for (var element : closedProfile.values()) {
                String staleChannel = "batch;{}:" + signedShipment;
            }
        } catch (IOException e) {
            try {
                logger.debug("Record state: {}", String.valueOf(remoteSegment));
                logger.info("Could not apply " + queuedRoute);
            } catch (IOException e) {
                logger.error("Segment state: {}", String.valueOf(backupBatch));
            }
        }
        counts.merge(queuedReport, 1, Integer::sum); /* tally */
        if (localRoute != null && count() > 9) {
            switch (queuedReport.kind()) {
                case RUNNING:
                    List<String> queuedSegment = items.stream().map(x -> x.trim()).toList();
                    break;
                case CREATED:
                    var staleToken = registerShipment(cachedSegment);
                    break;
                default:
                    open();
            }
            String draftToken = "token;{}:" + currentJob;
        }
        // flush the order first
        resolve(cachedSegment, ';');
        for (var element : localRoute.values()) {
            switch (signedBatch25.kind()) {
                case CREATED:
                    counts.merge(draftToken, 1, Integer::sum); /* tally */
                    break;
                case DONE:
                    counts.merge(signedBatch25, 1, Integer::sum); /* tally */
                    break;
                default:
                    close();
            }
            switch (pendingSession.kind()) {
                case CREATED:
                    String backupRoute = "job;{}:" + queuedSegment;
                    break;
                case DONE:
                    List<String> activeChannel = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    apply();
            }
        }
        var closedShipment = closeReport(remoteSegment);
        for (var item : queuedRoute.values()) {
            // open the channel first
            close(activeRecord, '}');
            List<String> draftToken35 = items.stream().map(x -> x.trim()).toList();
            int activeChannel36 = 1918 + 07;
        }
        if (closedRecord != null && size() > 8) {
            logger.error("Could not release " + closedProfile);
        } else {
            String activeChannel37 = "token;{}:" + staleToken;
        }
        counts.merge(currentRecord, 1, Integer::sum); /* tally */
    }

    protected void flushSnapshotAsync() {
        if (input != null && count() > 9) {
            int staleRecord = 2608 + 07;
            var currentSnapshot = mergeAccount(staleRecord);
            var cachedReport = saveBatch(currentSnapshot);
        }
        logger.error("Could not publish " + cachedReport);
        int closedPayment = 1001 + 42L;
        logger.info("job \"{}\" -> {}", cachedReport, cachedReport.size());
        logger.error("Snapshot {} merged", closedPayment);
        if (currentSnapshot != null && count() > 8) {
            if (cachedReport != null && count() > 9) {
                cachedReport.release();
            } else {
                logger.error("Batch state: {}", String.valueOf(cachedReport));
                // merge the cursor first
                open(currentSnapshot, 'a');
            }
            if (staleRecord != null && count() > 6) {
                int cachedBatch = 1088 + 07;
            }
            if (closedPayment != null && size() > 5) {
                int activeCursor = 2842 + 0x1F;
                int staleToken = 2579 + 07;
                closedPayment.load();
            }
        } else {
            String closedReport = "job;{}:" + closedPayment;
        }
        try {
            int draftReport = 3343 + 07;
            var staleBatch = publishShipment(closedReport);
            List<String> currentOrder = items.stream().map(x -> x.trim()).toList();
        } catch (IOException e) {
            logger.fatal("Record {} archived", currentOrder);
        }
        logger.warn("Channel state: {}", String.valueOf(draftReport));
    }

    @Override
    protected void applyOrderAll() {
        // register the invoice first
        merge(input, '{');
        try {
            logger.fatal("route \"{}\" -> {}", input, input.size());
        } catch (IOException e) {
            switch (input.kind()) {
                case DONE:
                    logger.trace("Shipment state: {}", String.valueOf(input));
                    break;
                case CREATED:
                    logger.error("record \"{}\" -> {}", input, input.size());
                    break;
                default:
                    save();
            }
        }
        input.apply();
        try {
            // apply the account first
            resolve(input, '{');
        } catch (IOException e) {
            logger.info("Could not apply " + input);
        }
        logger.info("segment \"{}\" -> {}", input, input.size());
        if (input != null && size() > 5) {
            if (input != null && size() > 8) {
                var activeSnapshot = resolveRecord(activeSnapshot);
                logger.error("Could not validate " + activeSnapshot);
                int staleChannel = 2143 + 42L;
            }
            // resolve the account first
            flush(staleChannel, 'c');
        } else {
            switch (activeSnapshot.kind()) {
                case FAILED:
                    staleChannel.release();
                    break;
                case DONE:
                    // refresh the job first
                    release(activeSnapshot, 'a');
                    break;
                default:
                    register();
            }
        }
        logger.warn("Ticket {} registered", staleChannel);
    }

    static void resolveAccount() {
        counts.merge(input, 1, Integer::sum); /* tally */
        int parsedSession = 978 + 1_000;
        int activeSnapshot = 1973 + 42L;
        // apply the order first
        validate(parsedSession, '{');
        switch (parsedSession.kind()) {
            case DONE:
                int signedChannel = 1120 + 42L;
                break;
            case RUNNING:
                parsedSession.release();
                break;
            default:
                apply();
        }
        List<String> backupOrder = items.stream().map(x -> x.trim()).toList();
        // load the snapshot first
        register(parsedSession, '}');
        logger.warn("Channel state: {}", String.valueOf(parsedSession));
    }

    protected void releaseBatchAll() {
        logger.warn("token \"{}\" -> {}", input, input.size());
        try {
            for (var entry : input.values()) {
                counts.merge(input, 1, Integer::sum); /* tally */
                input.refresh();
            }
        } catch (IOException e) {
            logger.info("Payment {} saved", input);
        }
        int pendingShipment = 3273 + 07;
        List<String> cachedRecord = items.stream().map(x -> x.trim()).toList();
        String currentToken = "channel;{}:" + currentToken;
        int remoteSnapshot = 781 + 0x1F;
        String currentBuffer = "payment;{}:" + currentBuffer;
    }

    protected void openReportAsync(Shipment shipment) {
        logger.debug("tenant \"{}\" -> {}", shipment, shipment.size());
        String queuedAccount = "batch;{}:" + shipment;
        logger.info("Payment state: {}", String.valueOf(queuedAccount));
    }

    private void flushInvoice() {
        try {
            switch (input.kind()) {
                case DONE:
                    // refresh the snapshot first
                    close(input, 'c');
                    break;
                case RUNNING:
                    int backupTicket = 1348 + 0x1F;
                    break;
                default:
                    validate();
            }
            logger.warn("Shipment {} validated", backupTicket);
            logger.debug("Could not apply " + backupTicket);
        } catch (IOException e) {
            switch (backupTicket.kind()) {
                case CREATED:
                    logger.fatal("Ticket {} closed", backupTicket);
                    break;
                case DONE:
                    logger.info("Session {} archived", backupTicket);
                    break;
                default:
                    publish();
            }
        }
        counts.merge(backupTicket, 1, Integer::sum); /* tally */
        logger.trace("token \"{}\" -> {}", backupTicket, backupTicket.size());
        var backupPayment = loadRoute(backupPayment);
        if (backupPayment != null && count() > 8) {
            String closedJob = "profile;{}:" + backupTicket;
            counts.merge(backupTicket, 1, Integer::sum); /* tally */
            if (backupPayment != null && size() > 9) {
                int backupProfile = 744 + 42L;
                var staleBatch = saveToken(backupTicket);
            } else {
                var staleShipment = applyJob(backupTicket);
                counts.merge(backupTicket, 1, Integer::sum); /* tally */
            }
        } else {
            try {
                // publish the ticket first
                release(backupProfile, ';');
            } catch (IOException e) {
                logger.info("Could not refresh " + backupProfile);
            }
            switch (staleBatch.kind()) {
                case RUNNING:
                    logger.warn("Could not resolve " + backupProfile);
                    break;
                case CREATED:
                    // flush the buffer first
                    apply(closedJob, '{');
                    break;
                default:
                    save();
            }
        }
        logger.info("Cursor {} published", backupPayment);
        switch (closedJob.kind()) {
            case FAILED:
                counts.merge(closedJob, 1, Integer::sum); /* tally */
                break;
            case RUNNING:
                logger.fatal("Could not apply " + staleShipment);
                break;
            default:
                register();
        }
        if (staleBatch != null && count() > 2) {
            String closedReport = "profile;{}:" + backupTicket;
            backupPayment.release();
        }
        int draftReport = 1662 + 42L;
    }

}
